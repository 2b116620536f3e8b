#pragma once

// Candidate-map tables shared by the endo_verify unit tests and the acceptance suite.

#include <vector>

#include "support/generators.hpp"
#include "tiltkit/endo_verify.hpp"
#include "tiltkit/tilting.hpp"

namespace tiltkit::testing {

/// Twenty generators: five linears x+t, six quadratics x^2 - a x + ab with
/// a < b drawn from the same t values, and nine products of two of those.
/// Every linear lies in a doubling or tripling pair, every quadratic is
/// covered by the easy-quad identity and every product factors through two
/// keys, so each entry is pinned by some consistency check.
inline std::vector<Poly> twenty_generators() {
  std::vector<Poly> lin, quad;
  for (long t : {1, 2, 3, 4, 6}) lin.push_back(Poly::linear(Rational(t)));
  for (auto [a, b] : {std::pair{1L, 2L}, {1L, 3L}, {2L, 3L}, {1L, 4L}, {2L, 6L}, {3L, 4L}})
    quad.push_back(Poly::quad_ab(Rational(a), Rational(b)));
  std::vector<Poly> gens = lin;
  gens.insert(gens.end(), quad.begin(), quad.end());
  gens.push_back(lin[0] * lin[1]);
  gens.push_back(lin[0] * lin[0]);
  gens.push_back(lin[2] * lin[4]);
  gens.push_back(quad[0] * lin[0]);
  gens.push_back(quad[1] * lin[2]);
  gens.push_back(quad[2] * lin[3]);
  gens.push_back(quad[3] * lin[1]);
  gens.push_back(quad[4] * quad[5]);
  gens.push_back(quad[0] * quad[2]);
  for (auto& g : gens) g = normalize(g);
  return gens;
}

inline EndoTable tilt_table(const std::vector<Poly>& keys, const Rational& gamma) {
  EndoTable t;
  for (const auto& k : keys) t.insert(k, tilt(k, gamma));
  return t;
}

/// Scales one nonzero coefficient of the image of one entry by a factor
/// other than one, then renormalizes. Support and degree are preserved.
inline EndoTable perturb_one(const EndoTable& table, Rng& rng) {
  const auto& e = table.entries();
  auto it = e.begin();
  std::advance(it, uniform(rng, 0, static_cast<long>(e.size()) - 1));
  const Poly& img = it->second;
  const auto supp = img.support();
  const std::size_t k = supp[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(supp.size()) - 1))];
  Rational factor;
  do factor = random_positive(rng, 9, 9);
  while (factor == Rational(1));
  std::vector<Rational> c(img.coeffs().begin(), img.coeffs().end());
  c[k] *= factor;
  EndoTable out = table;
  out.insert(it->first, normalize(Poly(c)));
  return out;
}

}  // namespace tiltkit::testing

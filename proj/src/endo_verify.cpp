#include "tiltkit/endo_verify.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "tiltkit/certificates.hpp"
#include "tiltkit/error.hpp"
#include "tiltkit/factorization.hpp"
#include "tiltkit/positivity.hpp"
#include "tiltkit/tilting.hpp"

namespace tiltkit {

// --- EndoTable ---------------------------------------------------------------

void EndoTable::insert(const Poly& from, const Poly& to) {
  if (from.is_zero() || to.is_zero()) throw Error(ErrorCode::InvalidArgument, "table entries must be nonzero");
  if (from.support() != to.support())
    throw Error(ErrorCode::InvalidArgument,
                "image " + to.str() + " does not have the support of " + from.str());
  entries_.insert_or_assign(normalize(from), normalize(to));
}

std::optional<Poly> EndoTable::find(const Poly& key) const {
  auto it = entries_.find(normalize(key));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<Poly> EndoTable::evaluate(const Poly& p) const {
  std::map<Poly, bool, PolyLess> dead;
  return evaluate_normalized(normalize(p), dead);
}

std::optional<Poly> EndoTable::evaluate_normalized(const Poly& p, std::map<Poly, bool, PolyLess>& dead) const {
  if (p.degree() == 0) return p;
  if (auto it = entries_.find(p); it != entries_.end()) return it->second;
  if (dead.count(p)) return std::nullopt;
  if (p[0].is_zero()) {
    // x is fixed by every support-preserving map.
    const auto c = p.coeffs();
    const Poly rest(std::vector<Rational>(c.begin() + 1, c.end()));
    if (auto img = evaluate_normalized(rest, dead)) return *img * Poly::monomial(1);
  }
  for (const auto& [key, image] : entries_) {
    if (key.degree() >= p.degree()) continue;
    auto [quot, rem] = divmod(p, key);
    if (!rem.is_zero()) continue;
    if (auto img = evaluate_normalized(normalize(quot), dead)) return normalize(image * *img);
  }
  dead.emplace(p, true);
  return std::nullopt;
}

// --- PhiTable ----------------------------------------------------------------

PhiTable::PhiTable(std::map<Rational, Rational> samples) {
  for (const auto& [t, v] : samples) set(t, v);
}

void PhiTable::set(const Rational& t, const Rational& phi) {
  if (t.sign() <= 0 || phi.sign() <= 0)
    throw Error(ErrorCode::InvalidArgument, "phi samples must be positive");
  samples_[t] = phi;
}

std::optional<Rational> PhiTable::at(const Rational& t) const {
  auto it = samples_.find(t);
  if (it == samples_.end()) return std::nullopt;
  return it->second;
}

// --- extension ---------------------------------------------------------------

namespace {

Poly require_image(const EndoTable& table, const Poly& p) {
  auto img = table.evaluate(p);
  if (!img) throw Error(ErrorCode::MissingGenerator, "no image for " + normalize(p).str());
  return *img;
}

// Phi[q r] / Phi[r] with r = (x + base)^n for the minimal Polya n; empty when
// the division leaves a remainder.
std::optional<Poly> quotient_through(const EndoTable& table, const Poly& q, const Rational& base, unsigned cap) {
  const PolyaCertificate cert = polya_exponent(q, base, cap);
  const Poly r = Poly::linear(base).pow(cert.n);
  const Poly top = require_image(table, cert.product);
  const Poly bottom = require_image(table, r);
  auto [quot, rem] = divmod(top, bottom);
  if (!rem.is_zero()) return std::nullopt;
  return normalize(quot);
}

}  // namespace

std::vector<Poly> extension_keys(const Poly& q, const ExtensionBases& bases) {
  const Poly nq = normalize(q);
  std::vector<Poly> keys{normalize(Poly::linear(bases.a)), normalize(Poly::linear(bases.b))};
  for (const auto& base : {bases.a, bases.b}) keys.push_back(normalize(polya_exponent(nq, base, bases.cap).product));
  return keys;
}

Poly extend_map(const EndoTable& table, const Poly& q, const ExtensionBases& bases) {
  if (bases.a == bases.b) throw Error(ErrorCode::InvalidArgument, "the two bases must differ");
  if (bases.a.sign() <= 0 || bases.b.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "bases must be positive");
  const Poly nq = normalize(q);
  const auto via_a = quotient_through(table, nq, bases.a, bases.cap);
  const auto via_b = quotient_through(table, nq, bases.b, bases.cap);
  if (!via_a && !via_b)
    throw Error(ErrorCode::NotPolynomial, "Phi[q r] / Phi[r] leaves a remainder for both multipliers");
  if (!via_a || !via_b || *via_a != *via_b) {
    auto show = [](const std::optional<Poly>& v) { return v ? v->str() : std::string("(not a polynomial)"); };
    throw Error(ErrorCode::NotWellDefined,
                "extension depends on the multiplier: " + show(via_a) + " vs " + show(via_b));
  }
  if (via_a->degree() != nq.degree())
    throw Error(ErrorCode::NotWellDefined, "extension changes the degree of " + nq.str());
  return *via_a;
}

Poly quad_image(const Rational& phi_a, const Rational& phi_b) {
  if (phi_a.sign() <= 0 || phi_b.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "phi values must be positive");
  return Poly({phi_a * phi_b, -phi_a, Rational(1)});
}

// --- residuals ---------------------------------------------------------------

bool ResidualReport::clean() const {
  return monotone_violations.empty() &&
         std::all_of(residuals.begin(), residuals.end(), [](const auto& r) { return r.value.is_zero(); });
}

ResidualReport homogeneity_residuals(const PhiTable& phi) {
  const auto& s = phi.samples();
  ResidualReport report;
  if (s.empty()) throw Error(ErrorCode::MissingPairs, "empty phi table");
  const Rational a = s.begin()->first;
  const Rational pa = s.begin()->second;
  for (const auto& [b, pb] : s) {
    if (auto p2 = phi.at(b * Rational(2)))
      report.residuals.push_back(
          {ResidualKind::Doubling, a, b, Rational(2) * pa * pb * *p2 - pa * *p2 * *p2});
    if (auto p3 = phi.at(b * Rational(3)))
      report.residuals.push_back({ResidualKind::Tripling, a, b,
                                  Rational(3) * pa * pb * p3->pow(2) - pa * p3->pow(3)});
  }
  if (report.residuals.empty())
    throw Error(ErrorCode::MissingPairs, "no sample b with 2b or 3b also sampled");
  for (auto i = s.begin(); i != s.end(); ++i)
    for (auto j = std::next(i); j != s.end(); ++j)
      if (i->second >= j->second) report.monotone_violations.push_back({i->first, j->first});
  return report;
}

// --- proof utilities ---------------------------------------------------------

unsigned long interval_orbit(const Rational& a, unsigned long max_steps) {
  if (a.abs() >= Rational(2)) throw Error(ErrorCode::InvalidArgument, "orbit start must lie in (-2, 2)");
  Rational x = a;
  const Rational one(1), two(2);
  for (unsigned long k = 0; k <= max_steps; ++k) {
    if (x.abs() <= one) return k;
    x = x * x - two;
  }
  throw Error(ErrorCode::OrbitCapExceeded, "orbit of " + a.str() + " not in [-1, 1] after cap");
}

std::pair<long, long> approx_23(double y, double eps, long max_window) {
  if (!(y > 0) || !(eps > 0) || !std::isfinite(y) || !std::isfinite(eps))
    throw Error(ErrorCode::InvalidArgument, "y and eps must be positive and finite");
  const long double ln2 = std::log(2.0L), ln3 = std::log(3.0L), lny = std::log(static_cast<long double>(y));
  const long double slack = -std::log1p(-static_cast<long double>(std::min(eps, 0.999999))) + 1e-9L;
  const Real ry(y), reps(eps);
  auto valid = [&](long m, long n) {
    const Real v = pow(Real(2), Real(m)) * pow(Real(3), Real(n));
    return abs(v - ry) <= reps * ry;
  };
  auto key = [](long m, long n) { return std::make_tuple(std::labs(m) + std::labs(n), std::labs(n), n, m); };

  for (long window = 4;; window *= 2) {
    if (window > max_window) window = max_window;
    std::optional<std::pair<long, long>> best;
    for (long n = -window; n <= window; ++n) {
      const long double center = (lny - static_cast<long double>(n) * ln3) / ln2;
      const auto lo = static_cast<long>(std::floor(center)) - 1;
      for (long m = lo; m <= lo + 3; ++m) {
        if (std::labs(m) > window) continue;
        const long double err = std::fabs(static_cast<long double>(m) * ln2 + static_cast<long double>(n) * ln3 - lny);
        if (err > slack || !valid(m, n)) continue;
        if (!best || key(m, n) < key(best->first, best->second)) best = std::pair{m, n};
      }
    }
    if (best && std::labs(best->first) + std::labs(best->second) <= window) return *best;
    if (window >= max_window)
      throw Error(ErrorCode::SearchCapExceeded,
                  "no 2^m 3^n within tolerance for |m|, |n| <= " + std::to_string(max_window));
  }
}

Poly pi_conjugate(const Poly& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> c(2 * p.coeffs().size() - 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[2 * k] = p[k];
  return Poly(std::move(c));
}

Poly pi_inverse(const Poly& p) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k % 2 == 1) {
      if (!p[k].is_zero())
        throw Error(ErrorCode::OddCoefficient, "coefficient of x^" + std::to_string(k) + " is nonzero");
      continue;
    }
    c.push_back(p[k]);
  }
  return Poly(std::move(c));
}

// --- tilting verdict ---------------------------------------------------------

std::string_view constraint_name(Constraint c) {
  switch (c) {
    case Constraint::Multiplicativity: return "multiplicativity";
    case Constraint::Injectivity: return "injectivity";
    case Constraint::Monotonicity: return "monotonicity";
    case Constraint::DoublingResidual: return "doubling-residual";
    case Constraint::TriplingResidual: return "tripling-residual";
    case Constraint::EasyQuad: return "easy-quad";
    case Constraint::TiltMismatch: return "tilt-mismatch";
  }
  return "unknown";
}

namespace {

Rational max_abs_diff(const Poly& a, const Poly& b) {
  Rational worst;
  const auto n = static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
  for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, (a[k] - b[k]).abs());
  return worst;
}

// x + t (normalized) -> t, for t > 0.
std::optional<Rational> linear_shift(const Poly& key) {
  if (key.degree() != 1 || key[0].sign() <= 0) return std::nullopt;
  return key[0] / key[1];
}

std::optional<Counterexample> check_multiplicative(const EndoTable& table) {
  const auto& e = table.entries();
  for (auto i = e.begin(); i != e.end(); ++i) {
    for (auto j = i; j != e.end(); ++j) {
      const Poly prod = normalize(i->first * j->first);
      auto direct = table.find(prod);
      if (!direct) continue;
      const Poly composed = normalize(i->second * j->second);
      if (composed != *direct)
        return Counterexample{Constraint::Multiplicativity,
                              "Phi[" + i->first.str() + "] Phi[" + j->first.str() + "] != Phi[" + prod.str() + "]",
                              max_abs_diff(composed, *direct)};
    }
  }
  return std::nullopt;
}

}  // namespace

TiltVerdict verify_is_tilting(const EndoTable& table, const std::vector<Poly>& generators) {
  const Poly unit_linear = normalize(Poly::linear(Rational(1)));
  const auto base_image = table.evaluate(unit_linear);
  if (!base_image) throw Error(ErrorCode::MissingGenerator, "table has no image for x + 1");
  for (const auto& g : generators)
    if (!table.evaluate(g)) throw Error(ErrorCode::MissingGenerator, "no image for generator " + g.str());

  if (auto bad = check_multiplicative(table)) return {std::nullopt, bad};

  PhiTable phi;
  for (const auto& [key, image] : table.entries())
    if (auto t = linear_shift(key)) phi.set(*t, image[0] / image[1]);

  {
    const auto& s = phi.samples();
    for (auto i = s.begin(); i != s.end(); ++i)
      for (auto j = std::next(i); j != s.end(); ++j)
        if (i->second == j->second)
          return {std::nullopt,
                  Counterexample{Constraint::Injectivity,
                                 "phi(" + i->first.str() + ") = phi(" + j->first.str() + ")", Rational(0)}};
  }

  std::optional<ResidualReport> report;
  try {
    report = homogeneity_residuals(phi);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MissingPairs) throw;
  }
  if (report) {
    if (!report->monotone_violations.empty()) {
      const auto& v = report->monotone_violations.front();
      return {std::nullopt,
              Counterexample{Constraint::Monotonicity,
                             "phi(" + v.s.str() + ") >= phi(" + v.t.str() + ")",
                             *phi.at(v.s) - *phi.at(v.t)}};
    }
    for (const auto& r : report->residuals) {
      if (r.value.is_zero()) continue;
      const bool dbl = r.kind == ResidualKind::Doubling;
      return {std::nullopt,
              Counterexample{dbl ? Constraint::DoublingResidual : Constraint::TriplingResidual,
                             std::string(dbl ? "phi(2b) != 2 phi(b)" : "phi(3b) != 3 phi(b)") + " at b = " + r.b.str(),
                             r.value.abs()}};
    }
  }

  for (const auto& [key, image] : table.entries()) {
    if (key.degree() != 2) continue;
    const Poly m = key.monic();
    const Rational a = -m[1];
    if (a.sign() <= 0) continue;
    const Rational b = m[0] / a;
    if (!(a < b)) continue;
    const auto pa = phi.at(a), pb = phi.at(b);
    if (!pa || !pb) continue;
    const Poly expected = normalize(quad_image(*pa, *pb));
    if (expected != image)
      return {std::nullopt,
              Counterexample{Constraint::EasyQuad,
                             "Phi[x^2 - " + a.str() + "*x + " + (a * b).str() + "] != x^2 - phi(a) x + phi(a) phi(b)",
                             max_abs_diff(expected, image)}};
  }

  // tilt maps x + 1 to (gamma x + 1)/(gamma + 1), so gamma is the coefficient ratio.
  const Rational gamma = (*base_image)[1] / (*base_image)[0];
  for (const auto& g : generators) {
    const Poly expected = tilt(g, gamma);
    const Poly actual = *table.evaluate(g);
    if (expected != actual)
      return {std::nullopt, Counterexample{Constraint::TiltMismatch,
                                           "Phi[" + normalize(g).str() + "] != tilt with gamma = " + gamma.str(),
                                           max_abs_diff(expected, actual)}};
  }
  return {gamma, std::nullopt};
}

}  // namespace tiltkit

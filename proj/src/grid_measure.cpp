#include "tiltkit/grid_measure.hpp"

#include <algorithm>
#include <set>

#include "tiltkit/error.hpp"

namespace tiltkit {

GridMeasure::GridMeasure(BigInt denom, BigInt offset, Poly masses)
    : denom_(std::move(denom)), offset_(std::move(offset)), masses_(std::move(masses)) {
  if (denom_ <= 0) throw Error(ErrorCode::InvalidArgument, "grid denominator must be positive");
  if (masses_.is_zero()) throw Error(ErrorCode::EmptySupport, "measure with no mass");
  if (masses_[0].is_zero())
    throw Error(ErrorCode::InvalidArgument, "mass at the offset point must be nonzero");
  if (masses_.sum().is_zero()) throw Error(ErrorCode::ZeroTotalMass, "total mass is zero");
}

GridMeasure GridMeasure::dirac(const Rational& z) {
  return GridMeasure(z.den(), z.num(), Poly::constant(Rational(1)));
}

std::vector<std::pair<Rational, Rational>> GridMeasure::support() const {
  std::vector<std::pair<Rational, Rational>> out;
  const auto c = masses_.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    out.emplace_back(Rational(offset_ + BigInt(static_cast<unsigned long>(k)), denom_), c[k]);
  }
  return out;
}

GridMeasure GridMeasure::refined(const BigInt& factor) const {
  if (factor <= 0) throw Error(ErrorCode::InvalidArgument, "refinement factor must be positive");
  if (factor == 1) return *this;
  const auto step = factor.get_ui();
  const auto c = masses_.coeffs();
  std::vector<Rational> spread((c.size() - 1) * step + 1);
  for (std::size_t k = 0; k < c.size(); ++k) spread[k * step] = c[k];
  return GridMeasure(denom_ * factor, offset_ * factor, Poly(std::move(spread)));
}

GridMeasure GridMeasure::normalized() const {
  return GridMeasure(denom_, offset_, normalize(masses_));
}

GridMeasure to_grid(const std::vector<Rational>& support, const std::vector<Rational>& masses) {
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "no support points");
  if (support.size() != masses.size())
    throw Error(ErrorCode::InvalidArgument, "support and masses differ in length");
  std::set<Rational> seen;
  BigInt denom = 1;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!seen.insert(support[i]).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate support point " + support[i].str());
    if (masses[i].is_zero())
      throw Error(ErrorCode::InvalidArgument, "zero mass at " + support[i].str());
    denom = lcm(denom, support[i].den());
  }
  std::vector<BigInt> ticks;
  ticks.reserve(support.size());
  for (const auto& s : support) ticks.push_back(s.num() * (denom / s.den()));
  const BigInt offset = *std::min_element(ticks.begin(), ticks.end());
  const BigInt top = *std::max_element(ticks.begin(), ticks.end());
  std::vector<Rational> m(BigInt(top - offset + 1).get_ui());
  for (std::size_t i = 0; i < ticks.size(); ++i) m[BigInt(ticks[i] - offset).get_ui()] = masses[i];
  return GridMeasure(denom, offset, Poly(std::move(m)));
}

GridMeasure conv(const GridMeasure& m1, const GridMeasure& m2) {
  const BigInt l = lcm(m1.denom(), m2.denom());
  const GridMeasure a = m1.refined(l / m1.denom());
  const GridMeasure b = m2.refined(l / m2.denom());
  return GridMeasure(l, a.offset() + b.offset(), a.masses() * b.masses());
}

}  // namespace tiltkit

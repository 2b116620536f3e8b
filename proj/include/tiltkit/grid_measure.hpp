#pragma once

#include <utility>
#include <vector>

#include "tiltkit/poly.hpp"
#include "tiltkit/rational.hpp"

namespace tiltkit {

/// Finitely supported signed measure on the grid Z/n.
///
/// The point (offset + k) / denom carries mass masses[k]. Masses at index 0
/// and at the top index are nonzero and the total mass is nonzero.
class GridMeasure {
 public:
  GridMeasure(BigInt denom, BigInt offset, Poly masses);

  /// Point mass at z.
  static GridMeasure dirac(const Rational& z);

  [[nodiscard]] const BigInt& denom() const { return denom_; }
  [[nodiscard]] const BigInt& offset() const { return offset_; }
  [[nodiscard]] const Poly& masses() const { return masses_; }
  [[nodiscard]] Rational total_mass() const { return masses_.sum(); }
  /// (point, mass) for every nonzero mass, in increasing point order.
  [[nodiscard]] std::vector<std::pair<Rational, Rational>> support() const;
  /// Same measure expressed on the finer grid Z/(denom * factor).
  [[nodiscard]] GridMeasure refined(const BigInt& factor) const;
  [[nodiscard]] GridMeasure normalized() const;

  friend bool operator==(const GridMeasure&, const GridMeasure&) = default;

 private:
  BigInt denom_;
  BigInt offset_;
  Poly masses_;
};

/// Builds the coarsest grid measure carrying the given masses. Points must be
/// distinct and masses nonzero. Throws EmptySupport, InvalidArgument, ZeroTotalMass.
GridMeasure to_grid(const std::vector<Rational>& support, const std::vector<Rational>& masses);

/// Convolution: offsets add and mass polynomials multiply on a common grid.
GridMeasure conv(const GridMeasure& m1, const GridMeasure& m2);

}  // namespace tiltkit

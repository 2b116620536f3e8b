#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <optional>
#include <vector>

#include "tiltkit/poly.hpp"

namespace tiltkit {

/// 50-digit binary float used for root finding and reconstruction.
using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Rational& r);

/// x + b, b >= 0.
struct LinearFactor {
  Real b;
  unsigned multiplicity = 1;
  /// Set when the root was extracted exactly over the rationals.
  std::optional<Rational> exact_b;
};

/// x^2 - a*gamma*x + gamma^2 with a in (-2, 2) and gamma > 0.
struct QuadraticFactor {
  Real a;
  Real gamma;
  unsigned multiplicity = 1;
};

/// scalar * x^monomial_power * prod(linear) * prod(quadratic).
struct FactorList {
  Rational scalar;
  unsigned monomial_power = 0;
  std::vector<LinearFactor> linear;
  std::vector<QuadraticFactor> quadratic;
};

/// Splits p (with normalize(p) positive on (0, inf)) into its real irreducible
/// factors. Throws NotInM, or PrecisionNotReached when the largest coefficient
/// residual of the reconstruction exceeds precision.
FactorList factor_real(const Poly& p, double precision);

/// Coefficients of the expanded product.
std::vector<Real> expand(const FactorList& f);

/// max_k |expand(f)_k - p_k|
Real reconstruction_residual(const Poly& p, const FactorList& f);

/// Square-free decomposition: monic factors with their multiplicities.
std::vector<std::pair<Poly, unsigned>> square_free_decomposition(const Poly& p);

/// One factor of a grouping, normalized to sum 1. exact is set whenever the
/// group's product has rational coefficients (verified by exact division).
struct FactorGroup {
  std::optional<Poly> exact;
  std::vector<Real> approx;
};

/// A factorization into irreducibles of the non-negative-coefficient semigroup.
/// The monomial x^monomial_power is kept apart from the groups.
struct PFactorization {
  unsigned monomial_power = 0;
  std::vector<FactorGroup> groups;
};

/// All distinct ways of writing normalize(p) as a product of irreducible
/// non-negative-coefficient polynomials. Throws DegreeCapExceeded when
/// deg p > degree_cap and InvalidArgument when p has a negative coefficient.
std::vector<PFactorization> enumerate_P_factorizations(const Poly& p, unsigned degree_cap);

}  // namespace tiltkit

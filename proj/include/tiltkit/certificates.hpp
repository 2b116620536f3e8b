#pragma once

#include "tiltkit/poly.hpp"

namespace tiltkit {

/// Witness that q(x) (x + gamma)^n has non-negative coefficients.
struct PolyaCertificate {
  Rational gamma;
  unsigned n = 0;
  Poly product;

  friend bool operator==(const PolyaCertificate&, const PolyaCertificate&) = default;
};

/// Smallest n <= cap with q (x + gamma)^n coefficientwise non-negative.
///
/// The set of certifying n is upward closed, so the first hit of the
/// incremental search is the minimum. Throws NotInM when q has a positive
/// root or is negative on (0, inf), and CapExceeded when the minimum is
/// larger than cap.
PolyaCertificate polya_exponent(const Poly& q, const Rational& gamma, unsigned cap);

/// Recomputes the product, checks non-negativity and that n - 1 fails.
bool verify_certificate(const Poly& q, const PolyaCertificate& c);

}  // namespace tiltkit

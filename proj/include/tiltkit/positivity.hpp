#pragma once

#include <cstddef>
#include <vector>

#include "tiltkit/poly.hpp"

namespace tiltkit {

/// Signed remainder sequence p, p', -rem(p, p'), ... ending at the gcd.
struct SturmChain {
  std::vector<Poly> chain;
};

SturmChain sturm_chain(const Poly& p);

/// True iff every coefficient is >= 0. The zero polynomial qualifies.
bool is_nonneg(const Poly& p);

/// Number of distinct roots in (0, inf). Throws ZeroPolynomial.
std::size_t positive_root_count(const Poly& p);

/// No roots in (0, inf) and p(1) != 0, i.e. normalize(p) lies in the cone of
/// polynomials positive on the positive half-line. Throws ZeroPolynomial.
bool in_M(const Poly& p);

}  // namespace tiltkit

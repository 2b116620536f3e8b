#include "tiltkit/certificates.hpp"

#include "tiltkit/error.hpp"
#include "tiltkit/positivity.hpp"

namespace tiltkit {

namespace {

// p * (x + gamma) in one pass.
Poly times_linear(const Poly& p, const Rational& gamma) {
  const auto c = p.coeffs();
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    out[k] += c[k] * gamma;
    out[k + 1] += c[k];
  }
  return Poly(std::move(out));
}

}  // namespace

PolyaCertificate polya_exponent(const Poly& q, const Rational& gamma, unsigned cap) {
  if (gamma.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "gamma must be positive");
  if (!in_M(q) || q.sum().sign() < 0)
    throw Error(ErrorCode::NotInM, q.str() + " is not positive on (0, inf); no certificate exists");
  Poly cur = q;
  for (unsigned n = 0;; ++n) {
    if (is_nonneg(cur)) return {gamma, n, std::move(cur)};
    if (n == cap) break;
    cur = times_linear(cur, gamma);
  }
  throw Error(ErrorCode::CapExceeded,
              "no certificate with n <= " + std::to_string(cap) + " for " + q.str());
}

bool verify_certificate(const Poly& q, const PolyaCertificate& c) {
  if (c.gamma.sign() <= 0) return false;
  const Poly base = Poly::linear(c.gamma);
  const Poly below = c.n == 0 ? Poly() : q * base.pow(c.n - 1);
  const Poly product = c.n == 0 ? q : below * base;
  if (product != c.product || !is_nonneg(product)) return false;
  return c.n == 0 || !is_nonneg(below);
}

}  // namespace tiltkit

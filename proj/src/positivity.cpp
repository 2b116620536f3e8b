#include "tiltkit/positivity.hpp"

#include "tiltkit/error.hpp"

namespace tiltkit {

namespace {

// Sign of f just to the right of 0: its lowest nonzero coefficient.
int sign_at_zero_plus(const Poly& f) { return f.is_zero() ? 0 : f[f.low_order()].sign(); }

int sign_at_infinity(const Poly& f) { return f.is_zero() ? 0 : f.leading().sign(); }

template <typename SignFn>
std::size_t variations(const SturmChain& s, SignFn sign) {
  std::size_t v = 0;
  int prev = 0;
  for (const auto& f : s.chain) {
    const int sg = sign(f);
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++v;
    prev = sg;
  }
  return v;
}

}  // namespace

SturmChain sturm_chain(const Poly& p) {
  SturmChain s;
  if (p.is_zero()) return s;
  s.chain.push_back(p);
  Poly d = p.derivative();
  while (!d.is_zero()) {
    s.chain.push_back(d);
    const auto& a = s.chain[s.chain.size() - 2];
    d = -divmod(a, d).second;
  }
  return s;
}

bool is_nonneg(const Poly& p) {
  for (const auto& c : p.coeffs())
    if (c.sign() < 0) return false;
  return true;
}

std::size_t positive_root_count(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of the zero polynomial");
  const SturmChain s = sturm_chain(square_free_part(p));
  const std::size_t at_zero = variations(s, sign_at_zero_plus);
  const std::size_t at_inf = variations(s, sign_at_infinity);
  return at_zero - at_inf;
}

bool in_M(const Poly& p) {
  return positive_root_count(p) == 0 && !p.sum().is_zero();
}

}  // namespace tiltkit

#include "tiltkit/tilting.hpp"

#include <cmath>

#include "tiltkit/error.hpp"

namespace tiltkit {

Poly tilt(const Poly& p, const Rational& gamma) {
  if (gamma.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "tilt parameter must be positive");
  const Rational at = p.eval(gamma);
  if (at.is_zero()) throw Error(ErrorCode::PoleAtGamma, "p(" + gamma.str() + ") = 0 for " + p.str());
  return p.dilate(gamma).scaled(at.inverse());
}

GridMeasure tilt_measure(const GridMeasure& m, const Rational& g) {
  if (g.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "tilt parameter must be positive");
  const Poly w = m.masses().dilate(g);
  const Rational total = w.sum();
  if (total.is_zero()) throw Error(ErrorCode::ZeroTotalMass, "tilted total mass is zero");
  return GridMeasure(m.denom(), m.offset(), w.scaled(total.inverse()));
}

Rational gamma_from_beta(double beta, long max_denom) {
  if (max_denom < 1) throw Error(ErrorCode::InvalidArgument, "max_denom must be >= 1");
  const double target = std::exp(-beta);
  if (!(target > 0) || !std::isfinite(target))
    throw Error(ErrorCode::InvalidArgument, "exp(-beta) not representable");
  // Convergents h/k of the exact binary value of target.
  const Rational x = Rational::from_double(target);
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Rational rest = x;
  Rational best;
  while (true) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), rest.num().get_mpz_t(), rest.den().get_mpz_t());
    const BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_denom) {
      // Semiconvergent with the largest admissible denominator.
      const BigInt t = (BigInt(max_denom) - k0) / k1;
      const Rational semi(t * h1 + h0, t * k1 + k0);
      const Rational conv(h1, k1);
      best = ((semi - x).abs() < (conv - x).abs()) ? semi : conv;
      break;
    }
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    const Rational frac = rest - Rational(a);
    if (frac.is_zero()) {
      best = Rational(h1, k1);
      break;
    }
    rest = frac.inverse();
  }
  if (best.sign() <= 0) best = Rational(BigInt(1), BigInt(max_denom));
  return best;
}

}  // namespace tiltkit

#pragma once

#include "tiltkit/grid_measure.hpp"
#include "tiltkit/poly.hpp"

namespace tiltkit {

/// Exponential tilt of a generating function: p(gamma x) / p(gamma), with
/// gamma = exp(-beta). Coefficient k is scaled by gamma^k; the support is
/// unchanged. Throws InvalidArgument for gamma <= 0, PoleAtGamma if p(gamma) = 0.
Poly tilt(const Poly& p, const Rational& gamma);

/// Tilt of a grid measure. g acts per grid step, so on Z/n it plays the role
/// of exp(-beta / n): the mass at grid index k is multiplied by g^k and the
/// result is renormalized to total mass 1. Throws ZeroTotalMass.
GridMeasure tilt_measure(const GridMeasure& m, const Rational& g);

/// Rational approximation of exp(-beta) with denominator at most max_denom
/// (best approximation by continued fractions).
Rational gamma_from_beta(double beta, long max_denom);

}  // namespace tiltkit

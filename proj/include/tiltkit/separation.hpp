#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "tiltkit/poly.hpp"

namespace tiltkit {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Feasibility problem A s >= b over free variables s.
struct LPInstance {
  Matrix A;
  Vector b;
};

/// Farkas alternative: lambda >= 0, A^T lambda = 0, <b, lambda> = 1.
struct FarkasCertificate {
  Vector lambda;
};

/// Exactly one of a feasible point or an infeasibility certificate.
using LPOutcome = std::variant<Vector, FarkasCertificate>;

/// Phase-1 simplex over the rationals with Bland's rule.
LPOutcome lp_feasibility(const LPInstance& inst);

bool satisfies(const LPInstance& inst, const Vector& s);
bool certifies_infeasible(const LPInstance& inst, const FarkasCertificate& c);

/// q with p q coefficientwise >= 0 and (p' q) negative at neg_index.
struct SeparationWitness {
  Poly q;
  std::size_t neg_index = 0;
};

/// p q >= 0 coefficientwise and normalize(q) positive on (0, inf).
bool in_cone(const Poly& p, const Poly& q);

/// The (n+3) x (n+2) system whose solutions s satisfy (p s)_k >= 0 for
/// k <= n+1 and (p' s)_{n+1} <= -1, where n = deg p.
LPInstance separation_system(const Poly& p, const Poly& pprime);

/// Witness that S_p is not contained in S_p'. Inputs need non-negative
/// coefficients, deg p' <= deg p, p_0 != 0 and normalize(p) != normalize(p').
/// Throws PreconditionViolated otherwise.
SeparationWitness separate(const Poly& p, const Poly& pprime);

/// Like separate, but the witness is normalized (q(1) = 1), every coefficient
/// has denominator <= denom_cap, and p q has strictly positive coefficients.
/// Throws CapTooSmall when no grid point in the search verifies.
SeparationWitness separate_dense(const Poly& p, const Poly& pprime, unsigned long denom_cap);

/// Checks the witness conditions exactly against the normalized inputs.
bool verify_witness(const Poly& p, const Poly& pprime, const SeparationWitness& w);

}  // namespace tiltkit

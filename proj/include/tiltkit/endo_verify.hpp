#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiltkit/poly.hpp"

namespace tiltkit {

/// Finite table of a candidate multiplicative map, extended to products of
/// its keys. Keys and images are stored normalized; every image has the
/// support (hence the degree) of its key. The monomial x is implicitly fixed.
class EndoTable {
 public:
  /// Throws InvalidArgument unless to has the same support as from.
  void insert(const Poly& from, const Poly& to);

  [[nodiscard]] const std::map<Poly, Poly, PolyLess>& entries() const { return entries_; }
  [[nodiscard]] std::optional<Poly> find(const Poly& key) const;
  /// Image of p using direct entries and multiplicativity; nullopt when p is
  /// not a product of keys. The result is normalized.
  [[nodiscard]] std::optional<Poly> evaluate(const Poly& p) const;

 private:
  std::optional<Poly> evaluate_normalized(const Poly& p, std::map<Poly, bool, PolyLess>& dead) const;

  std::map<Poly, Poly, PolyLess> entries_;
};

/// Samples t -> phi(t) of the map induced on linear factors, x + t -> x + phi(t).
class PhiTable {
 public:
  PhiTable() = default;
  explicit PhiTable(std::map<Rational, Rational> samples);

  void set(const Rational& t, const Rational& phi);
  [[nodiscard]] const std::map<Rational, Rational>& samples() const { return samples_; }
  [[nodiscard]] std::optional<Rational> at(const Rational& t) const;

 private:
  std::map<Rational, Rational> samples_;
};

/// Multipliers (x + a)^n and (x + b)^n used by extend_map.
struct ExtensionBases {
  Rational a{1};
  Rational b{2};
  unsigned cap = 500;
};

/// Polynomials whose images extend_map(table, q, bases) reads from the table.
std::vector<Poly> extension_keys(const Poly& q, const ExtensionBases& bases = {});

/// Image of q (positive on (0, inf)) as Phi[q r] / Phi[r] for r = (x + a)^n
/// and r = (x + b)^n, with n the minimal certifying exponent per base.
/// Throws NotWellDefined if the two quotients or the degrees disagree (a
/// quotient that is not a polynomial counts as disagreeing), NotPolynomial if
/// both divisions leave a remainder, MissingGenerator if an image cannot be
/// read from the table.
Poly extend_map(const EndoTable& table, const Poly& q, const ExtensionBases& bases = {});

/// x^2 - phi_a x + phi_a phi_b, the forced image of x^2 - a x + a b.
Poly quad_image(const Rational& phi_a, const Rational& phi_b);

enum class ResidualKind { Doubling, Tripling };

/// Vanishing x-coefficient of Phi[q^{a,b}] Phi[(x + m b)^m] for m = 2, 3:
///   doubling: 2 phi(a) phi(b) phi(2b) - phi(a) phi(2b)^2
///   tripling: 3 phi(a) phi(b) phi(3b)^2 - phi(a) phi(3b)^3
struct HomogeneityResidual {
  ResidualKind kind;
  Rational a;
  Rational b;
  Rational value;
};

/// s < t with phi(s) >= phi(t).
struct MonotoneViolation {
  Rational s;
  Rational t;
};

struct ResidualReport {
  std::vector<HomogeneityResidual> residuals;
  std::vector<MonotoneViolation> monotone_violations;

  [[nodiscard]] bool clean() const;
};

/// Residuals for every b with 2b (resp. 3b) sampled. The residual factors as
/// phi(a) phi(mb) (m phi(b) - phi(mb)) up to a power of phi(mb), so a is taken
/// as the smallest sample. Throws MissingPairs if no such b exists.
ResidualReport homogeneity_residuals(const PhiTable& phi);

/// Smallest k with f^k(a) in [-1, 1] for f(x) = x^2 - 2, iterated exactly.
/// Requires |a| < 2. Throws OrbitCapExceeded after max_steps iterations.
unsigned long interval_orbit(const Rational& a, unsigned long max_steps = 1'000'000);

/// (m, n) with |2^m 3^n - y| <= eps y, minimizing |m| + |n| (ties: smaller
/// |n|, then smaller n, then smaller m). Windows of exponents grow
/// geometrically up to max_window. Throws SearchCapExceeded.
std::pair<long, long> approx_23(double y, double eps, long max_window = 1L << 16);

/// q(x) -> q(x^2)
Poly pi_conjugate(const Poly& p);
/// Inverse of pi_conjugate. Throws OddCoefficient.
Poly pi_inverse(const Poly& p);

enum class Constraint {
  Multiplicativity,
  Injectivity,
  Monotonicity,
  DoublingResidual,
  TriplingResidual,
  EasyQuad,
  TiltMismatch,
};

std::string_view constraint_name(Constraint c);

struct Counterexample {
  Constraint constraint;
  std::string detail;
  /// Largest absolute coefficient (or scalar) discrepancy.
  Rational residual;
};

struct TiltVerdict {
  std::optional<Rational> gamma;
  std::optional<Counterexample> counterexample;

  [[nodiscard]] bool is_tilting() const { return gamma.has_value(); }
};

/// Decides whether the table agrees with p -> p(gamma x) / p(gamma) on the
/// generators. The tilt sends x + 1 to (gamma x + 1)/(gamma + 1), so gamma is
/// read off that image as a coefficient ratio. Structural constraints
/// are checked first so a rejection names the first one that fails.
/// Throws MissingGenerator if x + 1 or a generator has no image.
TiltVerdict verify_is_tilting(const EndoTable& table, const std::vector<Poly>& generators);

}  // namespace tiltkit

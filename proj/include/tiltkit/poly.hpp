#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiltkit/rational.hpp"

namespace tiltkit {

/// Dense univariate polynomial over the rationals; coefficient k multiplies x^k.
///
/// The leading stored coefficient is never zero. The zero polynomial has no
/// coefficients and degree kZeroDegree. Values are immutable once built;
/// nothing here normalizes implicitly, callers pick normalize() explicitly.
class Poly {
 public:
  static constexpr long kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly monomial(std::size_t k, const Rational& c = Rational(1));
  /// x + b
  static Poly linear(const Rational& b) { return Poly({b, Rational(1)}); }
  /// x^2 - a x + a b
  static Poly quad_ab(const Rational& a, const Rational& b);
  /// x^2 - a x + 1
  static Poly quad_a(const Rational& a);

  [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] std::span<const Rational> coeffs() const { return c_; }
  /// Coefficient of x^k; zero past the degree.
  [[nodiscard]] Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
  [[nodiscard]] const Rational& leading() const { return c_.back(); }
  /// Index set of nonzero coefficients.
  [[nodiscard]] std::vector<std::size_t> support() const;
  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  [[nodiscard]] std::size_t low_order() const;

  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] Rational sum() const;
  [[nodiscard]] Poly derivative() const;
  /// p(c x)
  [[nodiscard]] Poly dilate(const Rational& c) const;
  /// p(-x)
  [[nodiscard]] Poly reflect() const { return dilate(Rational(-1)); }
  [[nodiscard]] Poly monic() const;
  [[nodiscard]] Poly pow(unsigned e) const;
  [[nodiscard]] Poly scaled(const Rational& c) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return a.scaled(Rational(-1)); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Rational& c) { return a.scaled(c); }
  friend Poly operator*(const Rational& c, const Poly& a) { return a.scaled(c); }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// "c0 + c1*x + c2*x^2", zero terms omitted, "0" for the zero polynomial.
  [[nodiscard]] std::string str() const;
  /// Inverse of str(); also accepts any sum of terms "c", "c*x", "c*x^k", "x^k".
  static Poly parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Strict weak order usable for std::map keys: by degree, then coefficients.
struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const;
};

/// Exact product; same as operator*.
Poly mul(const Poly& p, const Poly& q);
/// Division with remainder over the rationals. Throws InvalidArgument for q = 0.
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);
/// s with s*q == p. Throws NonzeroRemainder if q does not divide p.
Poly div_exact(const Poly& p, const Poly& q);
/// p / p(1). Throws ZeroAtOne.
Poly normalize(const Poly& p);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& p, const Poly& q);
/// p / gcd(p, p'), made monic.
Poly square_free_part(const Poly& p);
inline Rational eval(const Poly& p, const Rational& x) { return p.eval(x); }

}  // namespace tiltkit

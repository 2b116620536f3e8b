#include "tiltkit/poly.hpp"

#include <algorithm>
#include <cctype>

#include "tiltkit/error.hpp"

namespace tiltkit {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::quad_ab(const Rational& a, const Rational& b) { return Poly({a * b, -a, Rational(1)}); }

Poly Poly::quad_a(const Rational& a) { return Poly({Rational(1), -a, Rational(1)}); }

std::vector<std::size_t> Poly::support() const {
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) s.push_back(k);
  return s;
}

std::size_t Poly::low_order() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return k;
  return 0;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational Poly::sum() const {
  Rational s;
  for (const auto& c : c_) s += c;
  return s;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::dilate(const Rational& c) const {
  std::vector<Rational> d(c_.size());
  Rational pw(1);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    d[k] = c_[k] * pw;
    pw *= c;
  }
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  std::vector<Rational> d(c_);
  for (auto& x : d) x *= c;
  return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<Rational> r;
  r.reserve(out.size());
  for (auto& v : out) r.emplace_back(v);
  return Poly(std::move(r));
}

Poly mul(const Poly& p, const Poly& q) { return p * q; }

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  if (p.degree() < q.degree()) return {Poly(), p};
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  const auto dq = static_cast<std::size_t>(q.degree());
  const auto nq = static_cast<std::size_t>(p.degree() - q.degree()) + 1;
  std::vector<Rational> quot(nq);
  const Rational lead_inv = q.leading().inverse();
  for (std::size_t i = nq; i-- > 0;) {
    const Rational t = rem[i + dq] * lead_inv;
    quot[i] = t;
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j <= dq; ++j) rem[i + j] -= t * q[j];
  }
  rem.resize(dq);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly div_exact(const Poly& p, const Poly& q) {
  auto [s, r] = divmod(p, q);
  if (!r.is_zero())
    throw Error(ErrorCode::NonzeroRemainder, "(" + q.str() + ") does not divide (" + p.str() + ")");
  return s;
}

Poly normalize(const Poly& p) {
  const Rational at_one = p.sum();
  if (at_one.is_zero()) throw Error(ErrorCode::ZeroAtOne, "p(1) = 0 for " + p.str());
  return p.scaled(at_one.inverse());
}

Poly gcd(const Poly& p, const Poly& q) {
  Poly a = p, b = q;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly square_free_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  return div_exact(p, gcd(p, p.derivative())).monic();
}

bool PolyLess::operator()(const Poly& a, const Poly& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ca = a.coeffs(), cb = b.coeffs();
  for (std::size_t k = 0; k < ca.size(); ++k)
    if (ca[k] != cb[k]) return ca[k] < cb[k];
  return false;
}

// --- text form -------------------------------------------------------------

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    const bool neg = c_[k].sign() < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    out += c_[k].abs().str();
    if (k >= 1) out += "*x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  Poly run() {
    std::vector<Rational> acc;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [c, k] = term();
      if (acc.size() <= k) acc.resize(k + 1);
      acc[k] += sign < 0 ? -c : c;
    }
    return Poly(std::move(acc));
  }

 private:
  std::pair<Rational, std::size_t> term() {
    Rational c(1);
    bool have_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      have_coeff = true;
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        return {c, 0};
      }
    }
    if (pos_ >= s_.size() || peek() != 'x') fail(have_coeff ? "expected 'x' after '*'" : "expected a term");
    ++pos_;
    skip_ws();
    std::size_t k = 1;
    if (pos_ < s_.size() && peek() == '^') {
      ++pos_;
      skip_ws();
      const auto start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 6) fail("exponent too large");
      k = static_cast<std::size_t>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    }
    return {c, k};
  }

  Rational number() {
    const auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ < s_.size() && peek() == '/') {
      ++pos_;
      const auto dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) fail("expected denominator");
    }
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                "bad polynomial '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return TermParser(text).run(); }

}  // namespace tiltkit

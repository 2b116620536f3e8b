#include "tiltkit/factorization.hpp"

#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "tiltkit/error.hpp"
#include "tiltkit/positivity.hpp"

namespace tiltkit {

namespace {

using Complex = boost::multiprecision::cpp_complex_50;

// Divisors are enumerated only below this bound; larger constants skip the
// rational-root pass and leave those roots to the numeric stage.
const BigInt kDivisorLimit("1000000000000");

Poly strip_monomial(const Poly& p, unsigned& power) {
  power = static_cast<unsigned>(p.low_order());
  const auto c = p.coeffs();
  return Poly(std::vector<Rational>(c.begin() + power, c.end()));
}

// Integer primitive polynomial proportional to p, positive leading coefficient.
std::vector<BigInt> primitive_integer(const Poly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  std::vector<BigInt> z;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    z.push_back(c.num() * (l / c.den()));
    g = gcd(g, z.back());
  }
  if (p.leading().sign() < 0) g = -g;
  for (auto& v : z) v /= g;
  return z;
}

std::optional<std::vector<BigInt>> divisors(BigInt n) {
  n = abs(n);
  if (n == 0 || n > kDivisorLimit) return std::nullopt;
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Removes negative rational roots from a square-free g with g(0) != 0.
Poly extract_rational_roots(Poly g, std::vector<Rational>& roots) {
  while (g.degree() >= 1) {
    const auto z = primitive_integer(g);
    const auto num_div = divisors(z.front());
    const auto den_div = divisors(z.back());
    if (!num_div || !den_div) break;
    bool found = false;
    for (const auto& u : *num_div) {
      for (const auto& v : *den_div) {
        const Rational b(u, v);
        if (b.den() != v) continue;  // duplicate of a reduced candidate
        if (g.eval(-b).is_zero()) {
          roots.push_back(b);
          g = div_exact(g, Poly::linear(b));
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }
  return g;
}

void horner(const std::vector<Real>& c, const Complex& z, Complex& val, Complex& der) {
  val = Complex(c.back());
  der = Complex(0);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    der = der * z + val;
    val = val * z + Complex(c[k]);
  }
}

// Simultaneous Aberth iteration on a monic square-free polynomial of degree >= 2.
std::vector<Complex> aberth_roots(const Poly& g) {
  std::vector<Real> c;
  for (const auto& r : g.coeffs()) c.push_back(to_real(r));
  const std::size_t d = c.size() - 1;
  Real radius = pow(abs(c[0]), Real(1) / Real(static_cast<unsigned>(d)));
  if (radius == 0) radius = 1;
  std::vector<Complex> z(d);
  const Real two_pi = boost::math::constants::two_pi<Real>();
  for (std::size_t k = 0; k < d; ++k) {
    const Real theta = two_pi * Real(static_cast<unsigned>(k)) / Real(static_cast<unsigned>(d)) + Real("0.4");
    z[k] = Complex(radius * cos(theta), radius * sin(theta));
  }
  const Real tol("1e-45");
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = 0;
    for (std::size_t k = 0; k < d; ++k) {
      Complex val, der;
      horner(c, z[k], val, der);
      if (abs(val) == 0) continue;
      const Complex ratio = val / der;
      Complex sum(0);
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) sum += Complex(1) / (z[k] - z[j]);
      const Complex w = ratio / (Complex(1) - ratio * sum);
      z[k] -= w;
      worst = std::max(worst, Real(abs(w) / std::max(Real(1), Real(abs(z[k])))));
    }
    if (worst < tol) break;
  }
  for (auto& root : z) {
    for (int i = 0; i < 4; ++i) {
      Complex val, der;
      horner(c, root, val, der);
      if (abs(der) == 0) break;
      root -= val / der;
    }
  }
  return z;
}

void multiply_into(std::vector<Real>& acc, const std::vector<Real>& f) {
  std::vector<Real> out(acc.size() + f.size() - 1, Real(0));
  for (std::size_t i = 0; i < acc.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += acc[i] * f[j];
  acc = std::move(out);
}

std::vector<Real> linear_coeffs(const LinearFactor& f) { return {f.b, Real(1)}; }

std::vector<Real> quadratic_coeffs(const QuadraticFactor& f) {
  return {f.gamma * f.gamma, -f.a * f.gamma, Real(1)};
}

}  // namespace

Real to_real(const Rational& r) { return Real(r.num().get_str()) / Real(r.den().get_str()); }

std::vector<std::pair<Poly, unsigned>> square_free_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (p.degree() <= 0) return out;
  const Poly f = p.monic();
  const Poly fd = f.derivative();
  const Poly a0 = gcd(f, fd);
  Poly b = div_exact(f, a0);
  Poly c = div_exact(fd, a0);
  Poly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const Poly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = div_exact(b, a);
    c = div_exact(d, a);
    d = c - b.derivative();
  }
  return out;
}

FactorList factor_real(const Poly& p, double precision) {
  if (!(precision > 0)) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  if (p.is_zero() || p.sum().is_zero() || !in_M(p))
    throw Error(ErrorCode::NotInM, p.str() + " has a root in (0, inf)");
  FactorList out;
  out.scalar = p.leading();
  const Poly f = strip_monomial(p, out.monomial_power);

  for (const auto& [part, mult] : square_free_decomposition(f)) {
    std::vector<Rational> exact_roots;
    const Poly rest = extract_rational_roots(part, exact_roots);
    for (const auto& b : exact_roots) out.linear.push_back({to_real(b), mult, b});
    if (rest.degree() < 1) continue;
    if (rest.degree() == 1) {
      out.linear.push_back({to_real(rest[0]), mult, std::nullopt});
      continue;
    }
    const auto real_count = positive_root_count(rest.reflect());
    auto roots = aberth_roots(rest);
    std::sort(roots.begin(), roots.end(),
              [](const Complex& x, const Complex& y) { return abs(x.imag()) < abs(y.imag()); });
    for (std::size_t k = 0; k < real_count; ++k) {
      Real b = -roots[k].real();
      if (b < 0) {
        if (b < -Real(precision))
          throw Error(ErrorCode::PrecisionNotReached, "real root isolated on the wrong side of 0");
        b = 0;
      }
      out.linear.push_back({b, mult, std::nullopt});
    }
    std::size_t upper = 0;
    for (std::size_t k = real_count; k < roots.size(); ++k) {
      if (roots[k].imag() <= 0) continue;
      ++upper;
      const Real gamma = abs(roots[k]);
      const Real a = 2 * roots[k].real() / gamma;
      if (!(abs(a) < 2))
        throw Error(ErrorCode::PrecisionNotReached, "complex pair collapsed onto the real line");
      out.quadratic.push_back({a, gamma, mult});
    }
    if (2 * upper + real_count != roots.size())
      throw Error(ErrorCode::PrecisionNotReached, "root iteration did not separate conjugate pairs");
  }

  if (reconstruction_residual(p, out) > Real(precision))
    throw Error(ErrorCode::PrecisionNotReached, "reconstruction residual above requested precision");
  return out;
}

std::vector<Real> expand(const FactorList& f) {
  std::vector<Real> acc{to_real(f.scalar)};
  for (const auto& l : f.linear)
    for (unsigned i = 0; i < l.multiplicity; ++i) multiply_into(acc, linear_coeffs(l));
  for (const auto& q : f.quadratic)
    for (unsigned i = 0; i < q.multiplicity; ++i) multiply_into(acc, quadratic_coeffs(q));
  acc.insert(acc.begin(), f.monomial_power, Real(0));
  return acc;
}

Real reconstruction_residual(const Poly& p, const FactorList& f) {
  const auto e = expand(f);
  Real worst = 0;
  const std::size_t n = std::max(e.size(), p.coeffs().size());
  for (std::size_t k = 0; k < n; ++k) {
    const Real lhs = k < e.size() ? e[k] : Real(0);
    worst = std::max(worst, Real(abs(lhs - to_real(p[k]))));
  }
  return worst;
}

// --- grouping search ---------------------------------------------------------

namespace {

using Counts = std::vector<unsigned>;

class GroupingSearch {
 public:
  GroupingSearch(const Poly& f, const FactorList& fl) : f_(f) {
    for (const auto& l : fl.linear) {
      types_.push_back(linear_coeffs(l));
      counts_.push_back(l.multiplicity);
    }
    for (const auto& q : fl.quadratic) {
      types_.push_back(quadratic_coeffs(q));
      counts_.push_back(q.multiplicity);
    }
    const auto z = primitive_integer(f);
    lead_ = z.back();
    Real scale = 1;
    for (const auto& c : f.coeffs()) scale = std::max(scale, Real(abs(to_real(c))));
    tol_ = Real("1e-25") * scale;
  }

  std::vector<std::vector<Counts>> run() {
    std::set<std::vector<Counts>> found;
    std::vector<Counts> current;
    recurse(counts_, current, found);
    return {found.begin(), found.end()};
  }

  FactorGroup group(const Counts& g) {
    const Info& info = lookup(g);
    FactorGroup out;
    if (info.exact) out.exact = normalize(*info.exact);
    Real total = 0;
    for (const auto& c : info.coeffs) total += c;
    for (const auto& c : info.coeffs) out.approx.push_back(c / total);
    return out;
  }

 private:
  struct Info {
    std::vector<Real> coeffs;
    std::optional<Poly> exact;
    bool nonneg = false;
  };

  const Info& lookup(const Counts& g) {
    auto it = info_.find(g);
    if (it != info_.end()) return it->second;
    Info info;
    info.coeffs = {Real(1)};
    for (std::size_t t = 0; t < g.size(); ++t)
      for (unsigned i = 0; i < g[t]; ++i) multiply_into(info.coeffs, types_[t]);
    // A monic rational factor of f has coefficients in (1/lead) Z.
    const Real lead(lead_.get_str());
    std::vector<Rational> cand;
    for (const auto& c : info.coeffs) {
      const Real scaled = round(c * lead);
      cand.emplace_back(BigInt(scaled.convert_to<boost::multiprecision::cpp_int>().str()), lead_);
    }
    const Poly candidate(std::move(cand));
    if (candidate.degree() == static_cast<long>(info.coeffs.size()) - 1 &&
        divmod(f_, candidate).second.is_zero()) {
      info.exact = candidate;
      info.nonneg = is_nonneg(candidate);
    } else {
      info.nonneg = std::all_of(info.coeffs.begin(), info.coeffs.end(),
                                [&](const Real& c) { return c >= -tol_; });
    }
    return info_.emplace(g, std::move(info)).first->second;
  }

  bool in_P(const Counts& g) { return lookup(g).nonneg; }

  // Visits every sub-multiset h of `of` (including empty and full).
  static void sub_multisets(const Counts& of, const std::function<void(const Counts&)>& visit) {
    Counts h(of.size(), 0);
    while (true) {
      visit(h);
      std::size_t t = 0;
      while (t < h.size() && h[t] == of[t]) h[t++] = 0;
      if (t == h.size()) return;
      ++h[t];
    }
  }

  bool irreducible(const Counts& g) {
    auto it = irreducible_.find(g);
    if (it != irreducible_.end()) return it->second;
    bool ok = in_P(g);
    const unsigned total = std::accumulate(g.begin(), g.end(), 0u);
    if (ok && total > 1) {
      sub_multisets(g, [&](const Counts& h) {
        if (!ok) return;
        const unsigned size = std::accumulate(h.begin(), h.end(), 0u);
        if (size == 0 || size == total) return;
        Counts rest(g.size());
        for (std::size_t t = 0; t < g.size(); ++t) rest[t] = g[t] - h[t];
        if (in_P(h) && in_P(rest)) ok = false;
      });
    }
    irreducible_.emplace(g, ok);
    return ok;
  }

  void recurse(const Counts& rem, std::vector<Counts>& current, std::set<std::vector<Counts>>& found) {
    const auto first = std::find_if(rem.begin(), rem.end(), [](unsigned c) { return c > 0; });
    if (first == rem.end()) {
      auto key = current;
      std::sort(key.begin(), key.end());
      found.insert(std::move(key));
      return;
    }
    const auto lead_type = static_cast<std::size_t>(first - rem.begin());
    sub_multisets(rem, [&](const Counts& g) {
      if (g[lead_type] == 0 || !irreducible(g)) return;
      Counts next(rem.size());
      for (std::size_t t = 0; t < rem.size(); ++t) next[t] = rem[t] - g[t];
      current.push_back(g);
      recurse(next, current, found);
      current.pop_back();
    });
  }

  Poly f_;
  BigInt lead_;
  Real tol_;
  std::vector<std::vector<Real>> types_;
  Counts counts_;
  std::map<Counts, Info> info_;
  std::map<Counts, bool> irreducible_;
};

}  // namespace

std::vector<PFactorization> enumerate_P_factorizations(const Poly& p, unsigned degree_cap) {
  if (p.is_zero() || !is_nonneg(p))
    throw Error(ErrorCode::InvalidArgument, "input must be a nonzero polynomial with non-negative coefficients");
  if (p.degree() > static_cast<long>(degree_cap))
    throw Error(ErrorCode::DegreeCapExceeded,
                "degree " + std::to_string(p.degree()) + " exceeds cap " + std::to_string(degree_cap));
  const FactorList fl = factor_real(p, 1e-30);
  unsigned power = 0;
  const Poly f = strip_monomial(p, power).monic();
  GroupingSearch search(f, fl);
  std::vector<PFactorization> out;
  for (const auto& partition : search.run()) {
    PFactorization fac;
    fac.monomial_power = power;
    for (const auto& g : partition) fac.groups.push_back(search.group(g));
    out.push_back(std::move(fac));
  }
  return out;
}

}  // namespace tiltkit

#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/generators.hpp"
#include "tiltkit/error.hpp"
#include "tiltkit/factorization.hpp"
#include "tiltkit/positivity.hpp"

using namespace tiltkit;
using namespace tiltkit::testing;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

using Coeffs = std::vector<Real>;

Coeffs times(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, Real(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Expands a FactorList without going through the library's expand().
Coeffs rebuild(const FactorList& f) {
  Coeffs acc{to_real(f.scalar)};
  for (unsigned k = 0; k < f.monomial_power; ++k) acc = times(acc, {Real(0), Real(1)});
  for (const auto& l : f.linear)
    for (unsigned k = 0; k < l.multiplicity; ++k) acc = times(acc, {l.b, Real(1)});
  for (const auto& q : f.quadratic)
    for (unsigned k = 0; k < q.multiplicity; ++k) acc = times(acc, {q.gamma * q.gamma, -q.a * q.gamma, Real(1)});
  return acc;
}

Real max_residual(const Poly& p, const FactorList& f) {
  const Coeffs r = rebuild(f);
  Real worst = 0;
  const std::size_t n = std::max(r.size(), p.coeffs().size());
  for (std::size_t k = 0; k < n; ++k) {
    const Real have = k < r.size() ? r[k] : Real(0);
    worst = std::max(worst, Real(abs(have - to_real(p[k]))));
  }
  return worst;
}

void check_shapes(const FactorList& f) {
  for (const auto& l : f.linear) CHECK(l.b >= 0);
  for (const auto& q : f.quadratic) {
    CHECK(q.a > -2);
    CHECK(q.a < 2);
    CHECK(q.gamma > 0);
  }
}

unsigned total_degree(const FactorList& f) {
  unsigned d = f.monomial_power;
  for (const auto& l : f.linear) d += l.multiplicity;
  for (const auto& q : f.quadratic) d += 2 * q.multiplicity;
  return d;
}

Poly group_product(const PFactorization& f) {
  Poly acc = Poly::monomial(f.monomial_power);
  for (const auto& g : f.groups) {
    REQUIRE(g.exact.has_value());
    acc = acc * *g.exact;
  }
  return acc;
}

}  // namespace

TEST_SUITE("factorization") {
  TEST_CASE("x^4 + x^2 + 1 splits into the two conjugate quadratics") {
    const auto f = factor_real(P("1 + x^2 + x^4"), 1e-12);
    CHECK(f.linear.empty());
    REQUIRE(f.quadratic.size() == 2);
    std::vector<double> as;
    for (const auto& q : f.quadratic) {
      CHECK(std::abs(q.gamma.convert_to<double>() - 1.0) < 1e-9);
      as.push_back(q.a.convert_to<double>());
    }
    std::sort(as.begin(), as.end());
    CHECK(std::abs(as[0] + 1.0) < 1e-9);
    CHECK(std::abs(as[1] - 1.0) < 1e-9);
    CHECK(max_residual(P("1 + x^2 + x^4"), f) <= Real(1e-9));
  }

  TEST_CASE("x^3 + 1 and (x+1)^2") {
    const auto f = factor_real(P("1 + x^3"), 1e-12);
    REQUIRE(f.linear.size() == 1);
    CHECK(f.linear[0].exact_b == Rational(1));
    REQUIRE(f.quadratic.size() == 1);
    CHECK(std::abs(f.quadratic[0].a.convert_to<double>() - 1.0) < 1e-9);
    CHECK(std::abs(f.quadratic[0].gamma.convert_to<double>() - 1.0) < 1e-9);

    const auto g = factor_real(P("1 + 2*x + x^2"), 1e-12);
    REQUIRE(g.linear.size() == 1);
    CHECK(g.linear[0].multiplicity == 2);
    CHECK(g.linear[0].exact_b == Rational(1));
    CHECK(g.quadratic.empty());
  }

  TEST_CASE("monomial channel and scalar") {
    const Poly p = P("3*x^2 + 3*x^3");
    const auto f = factor_real(p, 1e-12);
    CHECK(f.monomial_power == 2);
    CHECK(f.scalar == Rational(3));
    CHECK(max_residual(p, f) <= Real(1e-12));
  }

  TEST_CASE("factor_real rejects inputs outside M(N)") {
    try {
      (void)factor_real(P("2 - 3*x + x^2"), 1e-9);
      FAIL("expected NotInM");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotInM);
    }
  }

  TEST_CASE("reconstruction and shapes on 200 random M(N) inputs") {
    Rng rng(61);
    for (int i = 0; i < 200; ++i) {
      const Poly p = random_M_grid(rng, 10);
      const auto f = factor_real(p, 1e-12);
      CHECK(max_residual(p, f) <= Real(1e-9));
      CHECK(total_degree(f) == static_cast<unsigned>(p.degree()));
      check_shapes(f);
    }
  }

  TEST_CASE("agreement with exact rational splits") {
    Rng rng(62);
    for (int i = 0; i < 100; ++i) {
      std::multiset<Rational> bs;
      Poly p = Poly::constant(Rational(1));
      const long nl = uniform(rng, 0, 4);
      for (long k = 0; k < nl; ++k) {
        const Rational b = random_rational(rng, 1, 6, 3);
        bs.insert(b);
        p = p * Poly::linear(b);
      }
      std::vector<std::pair<double, double>> quads;  // (a, gamma)
      const long nq = uniform(rng, 0, 2);
      for (long k = 0; k < nq; ++k) {
        const Rational g = random_positive(rng, 4, 2);
        const Rational a(BigInt(uniform(rng, -19, 19)), BigInt(10));
        quads.emplace_back(a.to_double(), g.to_double());
        p = p * Poly({g * g, -a * g, Rational(1)});
      }
      if (p.degree() < 1) continue;
      const auto f = factor_real(p, 1e-12);
      std::multiset<Rational> got;
      for (const auto& l : f.linear) {
        REQUIRE(l.exact_b.has_value());
        for (unsigned m = 0; m < l.multiplicity; ++m) got.insert(*l.exact_b);
      }
      CHECK(got == bs);
      std::vector<std::pair<double, double>> fq;
      for (const auto& q : f.quadratic)
        for (unsigned m = 0; m < q.multiplicity; ++m) fq.emplace_back(q.a.convert_to<double>(), q.gamma.convert_to<double>());
      REQUIRE(fq.size() == quads.size());
      std::sort(fq.begin(), fq.end());
      std::sort(quads.begin(), quads.end());
      for (std::size_t k = 0; k < fq.size(); ++k) {
        CHECK(std::abs(fq[k].first - quads[k].first) < 1e-9);
        CHECK(std::abs(fq[k].second - quads[k].second) < 1e-9);
      }
    }
  }

  TEST_CASE("square-free decomposition") {
    const Poly a = P("1 + x"), b = P("2 + x^2");
    const auto parts = square_free_decomposition(a * a * a * b);
    Poly rebuilt = Poly::constant(Rational(1));
    for (const auto& [f, m] : parts) rebuilt = rebuilt * f.pow(m);
    CHECK(rebuilt.monic() == (a * a * a * b).monic());
  }

  TEST_CASE("P(N) factorizations of small examples") {
    const auto one = enumerate_P_factorizations(P("1 + x^3"), 12);
    REQUIRE(one.size() == 1);
    REQUIRE(one[0].groups.size() == 1);
    CHECK(one[0].groups[0].exact == normalize(P("1 + x^3")));

    const auto sq = enumerate_P_factorizations(P("1 + 2*x + x^2"), 12);
    REQUIRE(sq.size() == 1);
    REQUIRE(sq[0].groups.size() == 2);
    CHECK(sq[0].groups[0].exact == P("1/2 + 1/2*x"));
    CHECK(sq[0].groups[1].exact == P("1/2 + 1/2*x"));
  }

  TEST_CASE("non-unique factorization fixture") {
    // q(x) = x^2 - x/2 + 1 times (x+1)(x+2): q pairs with either linear factor.
    const Poly p = Poly::quad_a(Rational(BigInt(1), BigInt(2))) * P("1 + x") * P("2 + x");
    const auto fs = enumerate_P_factorizations(p, 8);
    CHECK(fs.size() == 2);
    std::set<std::vector<std::string>> distinct;
    for (const auto& f : fs) {
      CHECK(group_product(f) == normalize(p));
      std::vector<std::string> g;
      for (const auto& grp : f.groups) g.push_back(grp.exact->str());
      std::sort(g.begin(), g.end());
      distinct.insert(g);
    }
    CHECK(distinct.size() == 2);
  }

  TEST_CASE("factorizations re-multiply to the normalized input") {
    Rng rng(63);
    for (int i = 0; i < 40; ++i) {
      Poly p = random_P(rng, 3) * random_P(rng, 3);
      if (uniform(rng, 0, 1)) p = p * Poly::quad_a(Rational(BigInt(uniform(rng, 0, 3)), BigInt(4)));
      if (p.degree() > 10 || !is_nonneg(p)) continue;
      for (const auto& f : enumerate_P_factorizations(p, 12)) {
        bool all_exact = true;
        for (const auto& g : f.groups) all_exact = all_exact && g.exact.has_value();
        if (all_exact) {
          CHECK(group_product(f) == normalize(p));
          for (const auto& g : f.groups) CHECK(is_nonneg(*g.exact));
        }
      }
    }
  }

  TEST_CASE("factorization errors") {
    auto code = [](auto&& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::ParseError;
    };
    CHECK(code([] { (void)enumerate_P_factorizations(Poly::parse("1 + x^9"), 8); }) == ErrorCode::DegreeCapExceeded);
    CHECK(code([] { (void)enumerate_P_factorizations(Poly::parse("1 - x + x^2"), 8); }) == ErrorCode::InvalidArgument);
  }
}

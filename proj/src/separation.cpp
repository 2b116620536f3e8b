#include "tiltkit/separation.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "tiltkit/error.hpp"
#include "tiltkit/positivity.hpp"

namespace tiltkit {

// --- exact phase-1 simplex ---------------------------------------------------

namespace {

class Phase1Tableau {
 public:
  // Columns: u (nv), v (nv), slack w (m), artificial y (m), rhs.
  explicit Phase1Tableau(const LPInstance& inst)
      : m_(inst.b.size()), nv_(inst.A.empty() ? 0 : inst.A.front().size()) {
    cols_ = 2 * nv_ + 2 * m_;
    rows_.assign(m_, std::vector<mpq_class>(cols_ + 1));
    sigma_.resize(m_);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      sigma_[i] = inst.b[i].sign() < 0 ? -1 : 1;
      const mpq_class s(sigma_[i]);
      auto& row = rows_[i];
      for (std::size_t j = 0; j < nv_; ++j) {
        row[j] = s * inst.A[i][j].raw();
        row[nv_ + j] = -row[j];
      }
      row[2 * nv_ + i] = -s;
      row[art(i)] = 1;
      row[cols_] = s * inst.b[i].raw();
      basis_[i] = art(i);
    }
    // Reduced costs: c_j - sum_i c_B(i) T_ij with c = 1 on artificials.
    cost_.assign(cols_ + 1, mpq_class(0));
    for (std::size_t i = 0; i < m_; ++i) cost_[art(i)] = 1;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= rows_[i][j];
  }

  void solve() {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      if (!enter) return;
      std::optional<std::size_t> leave;
      mpq_class best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(rows_[i][*enter]) <= 0) continue;
        mpq_class ratio = rows_[i][cols_] / rows_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) throw std::logic_error("phase-1 objective unbounded");
      pivot(*leave, *enter);
    }
  }

  // Phase-1 optimum is -cost_[rhs].
  [[nodiscard]] bool feasible() const { return sgn(cost_[cols_]) == 0; }

  [[nodiscard]] Vector primal() const {
    std::vector<mpq_class> x(cols_);
    for (std::size_t i = 0; i < m_; ++i) x[basis_[i]] = rows_[i][cols_];
    Vector s(nv_);
    for (std::size_t j = 0; j < nv_; ++j) s[j] = Rational(mpq_class(x[j] - x[nv_ + j]));
    return s;
  }

  [[nodiscard]] Vector farkas(const LPInstance& inst) const {
    // Optimal phase-1 duals pi_i = 1 - reduced cost of artificial i; undoing
    // the row sign flips gives y >= 0 with A^T y = 0 and <b, y> > 0.
    std::vector<mpq_class> y(m_);
    mpq_class by = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      y[i] = sigma_[i] * (1 - cost_[art(i)]);
      by += inst.b[i].raw() * y[i];
    }
    Vector lambda(m_);
    for (std::size_t i = 0; i < m_; ++i) lambda[i] = Rational(mpq_class(y[i] / by));
    return lambda;
  }

 private:
  [[nodiscard]] std::size_t art(std::size_t i) const { return 2 * nv_ + m_ + i; }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const mpq_class inv = 1 / prow[c];
    for (auto& v : prow) v *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      const mpq_class f = rows_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(prow[j]) != 0) rows_[i][j] -= f * prow[j];
    }
    if (sgn(cost_[c]) != 0) {
      const mpq_class f = cost_[c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(prow[j]) != 0) cost_[j] -= f * prow[j];
    }
    basis_[r] = c;
  }

  std::size_t m_, nv_, cols_ = 0;
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<mpq_class> cost_;
  std::vector<int> sigma_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPOutcome lp_feasibility(const LPInstance& inst) {
  if (inst.A.size() != inst.b.size())
    throw Error(ErrorCode::InvalidArgument, "LP row count differs from length of b");
  const std::size_t nv = inst.A.empty() ? 0 : inst.A.front().size();
  for (const auto& row : inst.A)
    if (row.size() != nv) throw Error(ErrorCode::InvalidArgument, "ragged LP matrix");

  Phase1Tableau t(inst);
  t.solve();
  if (t.feasible()) {
    Vector s = t.primal();
    if (!satisfies(inst, s)) throw std::logic_error("simplex returned an infeasible point");
    return s;
  }
  FarkasCertificate c{t.farkas(inst)};
  if (!certifies_infeasible(inst, c)) throw std::logic_error("simplex returned a bad Farkas certificate");
  return c;
}

bool satisfies(const LPInstance& inst, const Vector& s) {
  for (std::size_t i = 0; i < inst.A.size(); ++i) {
    if (inst.A[i].size() != s.size()) return false;
    Rational lhs;
    for (std::size_t j = 0; j < s.size(); ++j) lhs += inst.A[i][j] * s[j];
    if (lhs < inst.b[i]) return false;
  }
  return true;
}

bool certifies_infeasible(const LPInstance& inst, const FarkasCertificate& c) {
  if (c.lambda.size() != inst.b.size()) return false;
  Rational dot;
  for (std::size_t i = 0; i < c.lambda.size(); ++i) {
    if (c.lambda[i].sign() < 0) return false;
    dot += inst.b[i] * c.lambda[i];
  }
  if (dot != Rational(1)) return false;
  const std::size_t nv = inst.A.empty() ? 0 : inst.A.front().size();
  for (std::size_t j = 0; j < nv; ++j) {
    Rational col;
    for (std::size_t i = 0; i < inst.A.size(); ++i) col += inst.A[i][j] * c.lambda[i];
    if (!col.is_zero()) return false;
  }
  return true;
}

// --- cones and separating witnesses -----------------------------------------

bool in_cone(const Poly& p, const Poly& q) {
  if (q.is_zero() || !in_M(q)) return false;
  return q.sum().sign() > 0 && is_nonneg(p * q);
}

LPInstance separation_system(const Poly& p, const Poly& pprime) {
  const auto n = static_cast<std::size_t>(p.degree());
  const std::size_t vars = n + 2;
  LPInstance inst;
  // Rows k = 0..n+1: (p s)_k = sum_j p_{k-j} s_j >= 0.
  for (std::size_t k = 0; k <= n + 1; ++k) {
    Vector row(vars);
    for (std::size_t j = 0; j <= k && j < vars; ++j) row[j] = p[k - j];
    inst.A.push_back(std::move(row));
    inst.b.emplace_back(0);
  }
  // -(p' s)_{n+1} >= 1.
  Vector last(vars);
  for (std::size_t j = 0; j < vars; ++j) last[j] = -pprime[n + 1 - j];
  inst.A.push_back(std::move(last));
  inst.b.emplace_back(1);
  return inst;
}

namespace {

struct Prepared {
  Poly p, pprime;
};

Prepared check_preconditions(const Poly& p, const Poly& pprime) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::PreconditionViolated, why); };
  if (p.is_zero() || pprime.is_zero()) fail("inputs must be nonzero");
  if (!is_nonneg(p) || !is_nonneg(pprime)) fail("inputs must have non-negative coefficients");
  if (pprime.degree() > p.degree()) fail("deg p' must not exceed deg p");
  if (p[0].is_zero()) fail("p_0 must be nonzero");
  Prepared out{normalize(p), normalize(pprime)};
  if (out.p == out.pprime) fail("p and p' coincide after normalization");
  return out;
}

std::optional<std::size_t> first_negative(const Poly& f) {
  const auto c = f.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k].sign() < 0) return k;
  return std::nullopt;
}

// Witness for normalized inputs; extra is added to the constant C.
Poly build_witness(const Poly& p, const Poly& pprime, const Rational& extra) {
  const auto n0 = static_cast<unsigned>(p.degree());
  Poly work = p, work_prime = pprime;
  Poly pad = Poly::constant(Rational(1));
  const bool gaps = std::any_of(p.coeffs().begin(), p.coeffs().end(),
                                [](const Rational& c) { return c.is_zero(); });
  if (gaps) {
    pad = Poly::linear(Rational(1)).pow(n0);
    work = p * pad;
    work_prime = pprime * pad;
  }
  const auto n = static_cast<std::size_t>(work.degree());
  const LPOutcome out = lp_feasibility(separation_system(work, work_prime));
  const auto* s_vec = std::get_if<Vector>(&out);
  if (s_vec == nullptr) throw std::logic_error("separation system reported infeasible");
  const Poly s(*s_vec);
  const Poly ps = work * s;
  Rational c;
  for (std::size_t k = n + 2; k <= 2 * n + 2; ++k) {
    const Rational need = -ps[k] / work[k - (n + 2)];
    if (need > c) c = need;
  }
  c += extra;
  const Poly q = s + Poly::monomial(n + 2, c);
  return normalize(q * pad);
}

}  // namespace

SeparationWitness separate(const Poly& p, const Poly& pprime) {
  const Prepared in = check_preconditions(p, pprime);
  SeparationWitness w;
  w.q = build_witness(in.p, in.pprime, Rational(0));
  const auto neg = first_negative(in.pprime * w.q);
  if (!neg || !is_nonneg(in.p * w.q)) throw std::logic_error("separating witness failed to verify");
  w.neg_index = *neg;
  return w;
}

namespace {

// Perturbs q by eps (x+1)^m for shrinking eps and rounds onto the 1/grid
// lattice, letting the constant term absorb the drift so the rounded witness
// still sums to one. Accepts the first candidate with p q strictly positive
// and a negative coefficient in p' q.
std::optional<SeparationWitness> round_onto_grid(const Prepared& in, const Poly& q, const BigInt& grid) {
  const auto m = static_cast<unsigned>(q.degree());
  const Poly bump = Poly::linear(Rational(1)).pow(m);
  Rational eps(1);
  for (int attempt = 0; attempt <= 64; ++attempt, eps /= Rational(2)) {
    if (attempt == 64) eps = Rational(0);
    const Poly qe = normalize(q + bump.scaled(eps));
    if (!first_negative(in.pprime * qe)) continue;
    std::vector<Rational> r(static_cast<std::size_t>(m) + 1);
    Rational tail;
    for (std::size_t k = 1; k <= m; ++k) {
      const mpq_class shifted = qe[k].raw() * mpq_class(grid) + mpq_class(1, 2);
      mpz_class rounded;
      mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
      r[k] = Rational(rounded, grid);
      tail += r[k];
    }
    r[0] = Rational(1) - tail;
    const Poly cand(std::move(r));
    if (cand.degree() != static_cast<long>(m)) continue;
    const Poly prod = in.p * cand;
    const bool strictly_positive =
        std::all_of(prod.coeffs().begin(), prod.coeffs().end(), [](const Rational& c) { return c.sign() > 0; }) &&
        prod.degree() == in.p.degree() + static_cast<long>(m);
    if (!strictly_positive) continue;
    if (const auto neg = first_negative(in.pprime * cand)) return SeparationWitness{cand, *neg};
  }
  return std::nullopt;
}

// A normalized witness of degree m with (p q)_k >= delta for every k and
// (p' q)_j <= -delta. Empty when no such q exists.
std::optional<Poly> margin_witness(const Prepared& in, std::size_t m, std::size_t j, const Rational& delta) {
  const std::size_t dp = static_cast<std::size_t>(in.p.degree());
  LPInstance inst;
  auto add = [&](Vector row, const Rational& rhs) {
    inst.A.push_back(std::move(row));
    inst.b.push_back(rhs);
  };
  for (std::size_t k = 0; k <= dp + m; ++k) {
    Vector row(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
      if (k >= i) row[i] = in.p[k - i];
    add(std::move(row), delta);
  }
  Vector neg(m + 1);
  for (std::size_t i = 0; i <= m; ++i)
    if (j >= i) neg[i] = -in.pprime[j - i];
  add(std::move(neg), delta);
  add(Vector(m + 1, Rational(1)), Rational(1));
  add(Vector(m + 1, Rational(-1)), Rational(-1));
  const LPOutcome out = lp_feasibility(inst);
  const auto* sol = std::get_if<Vector>(&out);
  if (sol == nullptr) return std::nullopt;
  return Poly(*sol);
}

}  // namespace

SeparationWitness separate_dense(const Poly& p, const Poly& pprime, unsigned long denom_cap) {
  if (denom_cap == 0) throw Error(ErrorCode::InvalidArgument, "denom_cap must be positive");
  const Prepared in = check_preconditions(p, pprime);
  const BigInt grid(denom_cap);
  const Poly q = build_witness(in.p, in.pprime, Rational(1));
  if (auto w = round_onto_grid(in, q, grid)) return *w;

  // The constructive witness can be dominated by its top term, leaving the
  // negative coefficient far below the grid spacing. Rounding moves every
  // coefficient of q by at most m/(2 denom_cap) and, since p and p' sum to
  // one, every product coefficient by at most as much, so a witness whose
  // margins exceed that bound survives rounding. Search degrees upward.
  const auto top_degree = static_cast<std::size_t>(q.degree());
  for (std::size_t m = 0; m <= top_degree; ++m) {
    const Rational delta(BigInt(static_cast<unsigned long>(m + 1)), BigInt(2) * grid);
    const std::size_t top = static_cast<std::size_t>(in.pprime.degree()) + m;
    for (std::size_t j = 0; j <= top; ++j) {
      const auto wide = margin_witness(in, m, j, delta);
      if (!wide) continue;
      if (auto w = round_onto_grid(in, *wide, grid)) return *w;
    }
  }
  throw Error(ErrorCode::CapTooSmall,
              "no witness on the 1/" + std::to_string(denom_cap) + " grid verifies");
}

bool verify_witness(const Poly& p, const Poly& pprime, const SeparationWitness& w) {
  if (p.is_zero() || pprime.is_zero() || w.q.is_zero()) return false;
  const Poly np = normalize(p), npp = normalize(pprime);
  if (!in_M(w.q) || w.q.sum().sign() <= 0) return false;
  if (!is_nonneg(np * w.q)) return false;
  return (npp * w.q)[w.neg_index].sign() < 0;
}

}  // namespace tiltkit

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "subgrowth/error.hpp"
#include "subgrowth/rational.hpp"

namespace subgrowth {

/// maximize c·x subject to A x = b, x >= 0, over exact rationals.
struct RationalLP {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::vector<std::string> labels;

  std::size_t rows() const { return A.size(); }
  std::size_t cols() const { return c.size(); }

  void check() const {
    if (b.size() != A.size()) throw InputError("LP: right-hand side length does not match row count");
    for (const auto& row : A)
      if (row.size() != c.size()) throw InputError("LP: row length does not match variable count");
    if (!labels.empty() && labels.size() != c.size()) throw InputError("LP: label count does not match");
  }

  Rational objective(const std::vector<Rational>& x) const {
    Rational v = 0;
    for (std::size_t j = 0; j < c.size(); ++j) v += c[j] * x[j];
    return v;
  }

  bool feasible(const std::vector<Rational>& x) const {
    if (x.size() != cols()) return false;
    for (const auto& v : x)
      if (sgn(v) < 0) return false;
    for (std::size_t i = 0; i < rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < cols(); ++j) s += A[i][j] * x[j];
      if (s != b[i]) return false;
    }
    return true;
  }
};

enum class LPStatus { optimal, infeasible, unbounded };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "?";
}

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  Rational value;
  std::vector<Rational> point;
  std::vector<std::size_t> basis;
  /// c_j − z_j for every structural column at the final tableau; all <= 0
  /// when optimal.
  std::vector<Rational> reduced_costs;
  std::size_t pivots = 0;
  std::size_t redundant_rows = 0;
};

namespace detail {

/// Dense simplex tableau: `m` constraint rows plus the objective row, each of
/// width `width` + 1 (right-hand side last). The objective row stores z_j − c_j.
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t width) : m_(m), w_(width), t_((m + 1) * (width + 1)) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i * (w_ + 1) + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i * (w_ + 1) + j]; }
  Rational& rhs(std::size_t i) { return at(i, w_); }
  Rational& obj(std::size_t j) { return at(m_, j); }
  std::size_t rows() const { return m_; }
  std::size_t width() const { return w_; }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = at(r, c);
    for (std::size_t j = 0; j <= w_; ++j) at(r, j) /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || sgn(at(i, c)) == 0) continue;
      Rational f = at(i, c);
      for (std::size_t j = 0; j <= w_; ++j)
        if (sgn(at(r, j)) != 0) at(i, j) -= f * at(r, j);
    }
    basis[r] = c;
  }

  void set_objective(const std::vector<Rational>& cost) {
    for (std::size_t j = 0; j <= w_; ++j) {
      Rational z = 0;
      for (std::size_t i = 0; i < m_; ++i) z += cost_of(cost, basis[i]) * at(i, j);
      obj(j) = z - (j < w_ ? cost_of(cost, j) : Rational(0));
    }
  }

  void erase_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r * (w_ + 1)),
             t_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (w_ + 1)));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

  void dump(std::ostream& os, const std::vector<std::string>& labels) const {
    os << "basis";
    for (std::size_t j = 0; j < w_; ++j) os << '\t' << (j < labels.size() ? labels[j] : "a" + std::to_string(j));
    os << "\trhs\n";
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i < m_)
        os << (basis[i] < labels.size() ? labels[basis[i]] : "a" + std::to_string(basis[i]));
      else
        os << "z-c";
      for (std::size_t j = 0; j <= w_; ++j) os << '\t' << at(i, j).get_str();
      os << '\n';
    }
  }

  /// Bland's rule: lowest-index improving column, ratio ties broken by lowest
  /// basic index. Returns false when unbounded.
  bool optimize(std::size_t allowed_cols, std::size_t& pivots) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed_cols; ++j)
        if (sgn(obj(j)) < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(at(i, *enter)) <= 0) continue;
        Rational ratio = rhs(i) / at(i, *enter);
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
      ++pivots;
    }
  }

  std::vector<std::size_t> basis;

 private:
  static Rational cost_of(const std::vector<Rational>& cost, std::size_t j) {
    return j < cost.size() ? cost[j] : Rational(0);
  }

  std::size_t m_, w_;
  std::vector<Rational> t_;
};

}  // namespace detail

/// Two-phase primal simplex with Bland's rule in exact arithmetic. When
/// `dump` is given, the final tableau is written there as TSV.
inline LPSolution solve_max(const RationalLP& lp, std::ostream* dump = nullptr) {
  lp.check();
  const std::size_t m = lp.rows();
  const std::size_t n = lp.cols();
  detail::Tableau t(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = sgn(lp.b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = flip ? Rational(-lp.A[i][j]) : lp.A[i][j];
    t.at(i, n + i) = 1;
    t.rhs(i) = flip ? Rational(-lp.b[i]) : lp.b[i];
    t.basis.push_back(n + i);
  }
  LPSolution sol;

  // Phase 1: maximize −Σ artificials.
  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  t.set_objective(phase1);
  t.optimize(n + m, sol.pivots);
  if (sgn(t.obj(n + m)) != 0) {
    sol.status = LPStatus::infeasible;
    if (dump) t.dump(*dump, lp.labels);
    return sol;
  }
  // Drive zero-level artificials out of the basis; rows where that is
  // impossible are linearly dependent and dropped.
  for (std::size_t i = 0; i < t.rows();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(t.at(i, j)) != 0) {
        col = j;
        break;
      }
    if (col) {
      t.pivot(i, *col);
      ++sol.pivots;
      ++i;
    } else {
      t.erase_row(i);
      ++sol.redundant_rows;
    }
  }

  // Phase 2 over structural columns only.
  t.set_objective(lp.c);
  if (!t.optimize(n, sol.pivots)) {
    sol.status = LPStatus::unbounded;
    if (dump) t.dump(*dump, lp.labels);
    return sol;
  }
  sol.status = LPStatus::optimal;
  sol.point.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) sol.point[t.basis[i]] = t.rhs(i);
  sol.basis = t.basis;
  std::sort(sol.basis.begin(), sol.basis.end());
  sol.value = lp.objective(sol.point);
  if (sol.value != t.obj(n + m)) throw Error("simplex: objective row disagrees with re-evaluation");
  if (!lp.feasible(sol.point)) throw Error("simplex: optimal point fails re-substitution");
  for (std::size_t j = 0; j < n; ++j) sol.reduced_costs.push_back(-t.obj(j));
  if (dump) t.dump(*dump, lp.labels);
  return sol;
}

struct LPVertex {
  std::vector<Rational> point;
  Rational value;
};

/// Every basic feasible solution, by depth-first enumeration of column bases
/// with incremental elimination. Points are deduplicated and sorted.
inline std::vector<LPVertex> enumerate_vertices(const RationalLP& lp, std::size_t max_vars = 24) {
  lp.check();
  const std::size_t n = lp.cols();
  if (n > max_vars)
    throw CapExceeded("vertex enumeration cap exceeded: " + std::to_string(n) + " variables > " +
                      std::to_string(max_vars));
  // Row-reduce [A | b] to full row rank.
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < lp.rows(); ++i) {
    auto r = lp.A[i];
    r.push_back(lp.b[i]);
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || sgn(rows[i][col]) == 0) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j <= n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (sgn(rows[i][n]) != 0) return {};  // inconsistent
  rows.resize(rank);

  std::vector<LPVertex> out;
  if (rank == 0) {
    out.push_back(LPVertex{std::vector<Rational>(n, Rational(0)), Rational(0)});
    return out;
  }

  // DFS: at depth d, rows[0..d) have been pivoted on chosen[0..d).
  std::vector<std::size_t> chosen;
  std::vector<std::vector<Rational>> points;
  auto record = [&](const std::vector<std::vector<Rational>>& tab) {
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < rank; ++i) {
      if (sgn(tab[i][n]) < 0) return;
      x[chosen[i]] = tab[i][n];
    }
    points.push_back(std::move(x));
  };
  auto dfs = [&](auto&& self, const std::vector<std::vector<Rational>>& tab, std::size_t first) -> void {
    std::size_t d = chosen.size();
    if (d == rank) {
      record(tab);
      return;
    }
    for (std::size_t col = first; col + (rank - d) <= n; ++col) {
      std::size_t piv = d;
      while (piv < rank && sgn(tab[piv][col]) == 0) ++piv;
      if (piv == rank) continue;
      auto next = tab;
      std::swap(next[d], next[piv]);
      Rational p = next[d][col];
      for (auto& v : next[d]) v /= p;
      for (std::size_t i = 0; i < rank; ++i) {
        if (i == d || sgn(next[i][col]) == 0) continue;
        Rational f = next[i][col];
        for (std::size_t j = 0; j <= n; ++j) next[i][j] -= f * next[d][j];
      }
      chosen.push_back(col);
      self(self, next, col + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, rows, 0);

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (auto& p : points) {
    Rational v = lp.objective(p);
    out.push_back(LPVertex{std::move(p), std::move(v)});
  }
  return out;
}

/// TSV dump of the constraint system: one row per constraint, then the
/// objective.
inline void write_lp_tsv(const RationalLP& lp, std::ostream& os) {
  os << "row";
  for (std::size_t j = 0; j < lp.cols(); ++j) os << '\t' << (j < lp.labels.size() ? lp.labels[j] : "x" + std::to_string(j));
  os << "\trhs\n";
  for (std::size_t i = 0; i < lp.rows(); ++i) {
    os << "c" << i;
    for (const auto& a : lp.A[i]) os << '\t' << a.get_str();
    os << "\t" << lp.b[i].get_str() << '\n';
  }
  os << "max";
  for (const auto& v : lp.c) os << '\t' << v.get_str();
  os << "\t\n";
}

}  // namespace subgrowth

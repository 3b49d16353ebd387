#pragma once

// Exact rational linear programming (two-phase primal simplex, Bland's rule).
// Sized for the small systems that polyhedral canonicalization produces.

#include "orbitsum/linalg.hpp"

#include <limits>
#include <vector>

namespace orbitsum {

/// ⟨normal, x⟩ ≥ offset for inequalities, = offset for equalities.
struct Constraint {
  Vec normal;
  Rational offset;

  friend bool operator==(const Constraint& a, const Constraint& b)
  {
    return a.offset == b.offset && a.normal == b.normal;
  }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  Vec point;
};

namespace detail {

class SimplexTableau {
 public:
  SimplexTableau(std::size_t dim, const std::vector<Constraint>& ge, const std::vector<Constraint>& eq)
      : dim_(dim), n_surplus_(ge.size())
  {
    const std::size_t m = ge.size() + eq.size();
    n_art_ = m;
    cols_ = 2 * dim_ + n_surplus_ + n_art_;
    rows_.assign(m, Vec(cols_ + 1, Rational(0)));
    basis_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const bool is_ge = i < ge.size();
      const Constraint& c = is_ge ? ge[i] : eq[i - ge.size()];
      Vec& row = rows_[i];
      for (std::size_t j = 0; j < dim_; ++j) {
        row[j] = c.normal[j];
        row[dim_ + j] = -c.normal[j];
      }
      if (is_ge) row[2 * dim_ + i] = -1;
      row[cols_] = c.offset;
      if (sgn(row[cols_]) < 0) {
        for (auto& x : row) x = -x;
      }
      row[art_col(i)] = 1;
      basis_[i] = art_col(i);
    }
  }

  bool phase_one()
  {
    Vec cost(cols_, Rational(0));
    for (std::size_t i = 0; i < n_art_; ++i) cost[art_col(i)] = 1;
    run(cost, cols_);
    if (sgn(objective_value(cost)) != 0) return false;
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < art_begin()) {
        ++i;
        continue;
      }
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < art_begin(); ++j) {
        if (sgn(rows_[i][j]) != 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, enter);
      ++i;
    }
    return true;
  }

  /// Minimizes objective·x over the feasible basis found by phase one.
  LpStatus phase_two(const Vec& objective)
  {
    Vec cost(cols_, Rational(0));
    for (std::size_t j = 0; j < dim_; ++j) {
      cost[j] = objective[j];
      cost[dim_ + j] = -objective[j];
    }
    cost_ = cost;
    return run(cost, art_begin()) ? LpStatus::optimal : LpStatus::unbounded;
  }

  Rational value() const { return objective_value(cost_); }

  Vec point() const
  {
    Vec x = zeros(dim_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t b = basis_[i];
      if (b < dim_) x[b] += rows_[i][cols_];
      else if (b < 2 * dim_) x[b - dim_] -= rows_[i][cols_];
    }
    return x;
  }

 private:
  std::size_t art_begin() const { return 2 * dim_ + n_surplus_; }
  std::size_t art_col(std::size_t i) const { return art_begin() + i; }

  Rational objective_value(const Vec& cost) const
  {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (sgn(cost[basis_[i]]) != 0) v += cost[basis_[i]] * rows_[i][cols_];
    }
    return v;
  }

  // Returns false on unboundedness. Columns >= limit never enter.
  bool run(const Vec& cost, std::size_t limit)
  {
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
          if (sgn(rows_[i][j]) != 0 && sgn(cost[basis_[i]]) != 0) reduced -= cost[basis_[i]] * rows_[i][j];
        }
        if (sgn(reduced) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c)
  {
    const Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) {
      if (sgn(x) != 0) x *= inv;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      const Rational f = rows_[i][c];
      for (std::size_t k = 0; k <= cols_; ++k) {
        if (sgn(rows_[r][k]) != 0) rows_[i][k] -= f * rows_[r][k];
      }
    }
    basis_[r] = c;
  }

  std::size_t dim_;
  std::size_t n_surplus_;
  std::size_t n_art_ = 0;
  std::size_t cols_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> basis_;
  Vec cost_;
};

}  // namespace detail

/// minimize ⟨objective, x⟩ subject to ge (≥) and eq (=) constraints, x free.
inline LpResult minimize(const Vec& objective, const std::vector<Constraint>& ge,
                         const std::vector<Constraint>& eq, std::size_t dim)
{
  detail::SimplexTableau t(dim, ge, eq);
  LpResult out;
  if (!t.phase_one()) {
    out.status = LpStatus::infeasible;
    return out;
  }
  out.status = t.phase_two(objective);
  if (out.status == LpStatus::optimal) {
    out.value = t.value();
    out.point = t.point();
  }
  return out;
}

inline std::optional<Vec> feasible_point(const std::vector<Constraint>& ge, const std::vector<Constraint>& eq,
                                         std::size_t dim)
{
  const LpResult r = minimize(zeros(dim), ge, eq, dim);
  if (r.status != LpStatus::optimal) return std::nullopt;
  return r.point;
}

}  // namespace orbitsum

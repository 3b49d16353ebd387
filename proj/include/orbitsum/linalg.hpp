#pragma once

#include "orbitsum/rational.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace orbitsum {

inline Rational dot(const Vec& a, const Vec& b)
{
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

inline bool is_zero(const Vec& a)
{
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return sgn(x) == 0; });
}

inline Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

inline Vec unit(std::size_t n, std::size_t i)
{
  Vec e = zeros(n);
  e[i] = 1;
  return e;
}

inline Vec add(const Vec& a, const Vec& b)
{
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b)
{
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(const Vec& a, const Rational& s)
{
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

/// Positive factor that turns `a` into a primitive integer vector (1 for the zero vector).
inline Rational primitive_factor(const Vec& a)
{
  mpz_class den_lcm = 1;
  for (const auto& x : a) {
    if (sgn(x) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto& x : a) {
    if (sgn(x) == 0) continue;
    mpz_class n = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return Rational(1);
  Rational f(den_lcm, num_gcd);
  f.canonicalize();
  return f;
}

inline Vec primitive(const Vec& a) { return scale(a, primitive_factor(a)); }

/// Row-reduced echelon form. Pivots are searched from the last column
/// backwards, so the reduced rows solve for trailing coordinates in terms
/// of leading ones. Each pivot entry is 1.
struct EchelonForm {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;  // pivots[i] is the pivot column of rows[i]
};

/// `cols` leading columns are eligible as pivots; any trailing columns
/// (e.g. an augmented right-hand side) are carried along.
inline EchelonForm rref(std::vector<Vec> rows, std::size_t cols)
{
  EchelonForm out;
  std::size_t rank = 0;
  for (std::size_t c = cols; c-- > 0 && rank < rows.size();) {
    std::size_t pick = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) != 0) {
        pick = r;
        break;
      }
    }
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    const Rational inv = 1 / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    out.pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  out.rows = std::move(rows);
  return out;
}

inline std::size_t rank_of(const std::vector<Vec>& rows, std::size_t cols)
{
  return rref(rows, cols).pivots.size();
}

/// Basis of {v : rows * v = 0}.
inline std::vector<Vec> nullspace(const std::vector<Vec>& rows, std::size_t cols)
{
  const EchelonForm e = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zeros(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(primitive(v));
  }
  return basis;
}

/// Unique solution of the square-or-tall system rows * x = rhs, if the
/// system has full column rank and is consistent.
inline std::optional<Vec> solve_unique(const std::vector<Vec>& rows, const Vec& rhs, std::size_t cols)
{
  std::vector<Vec> aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Vec r = rows[i];
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  std::vector<Vec> aug_copy = aug;
  const EchelonForm e = rref(std::move(aug), cols);
  if (e.pivots.size() != cols) return std::nullopt;
  // Inconsistent rows would reduce to 0 = nonzero and be dropped by rref on
  // the coefficient columns, so check the residual explicitly.
  Vec x = zeros(cols);
  for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = e.rows[i][cols];
  for (std::size_t i = 0; i < aug_copy.size(); ++i) {
    Rational s = 0;
    for (std::size_t k = 0; k < cols; ++k) s += aug_copy[i][k] * x[k];
    if (s != aug_copy[i][cols]) return std::nullopt;
  }
  return x;
}

}  // namespace orbitsum

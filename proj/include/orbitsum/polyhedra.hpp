#pragma once

// Exact rational convex polyhedra: H/V representations, canonical form,
// Fourier–Motzkin projection, Minkowski sums with cones, vertex and ray
// enumeration, recession cones, membership and lattice points.

#include "orbitsum/lp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitsum {

/// {x : ⟨a, x⟩ ≥ α for every inequality, ⟨e, x⟩ = δ for every equality}.
struct HPolyhedron {
  std::size_t dim = 0;
  std::vector<Constraint> inequalities;
  std::vector<Constraint> equalities;

  static HPolyhedron universe(std::size_t dim) { return HPolyhedron{dim, {}, {}}; }

  /// Canonical empty set: the single inequality 0 ≥ 1.
  static HPolyhedron empty(std::size_t dim) { return HPolyhedron{dim, {Constraint{zeros(dim), Rational(1)}}, {}}; }

  void add_ge(Vec normal, Rational offset) { inequalities.push_back({std::move(normal), std::move(offset)}); }
  void add_le(const Vec& normal, const Rational& offset) { inequalities.push_back({scale(normal, -1), -offset}); }
  void add_eq(Vec normal, Rational offset) { equalities.push_back({std::move(normal), std::move(offset)}); }

  friend bool operator==(const HPolyhedron&, const HPolyhedron&) = default;
};

/// Conv(vertices) + Cone(rays). An empty vertex list means the empty set.
struct VPolyhedron {
  std::size_t dim = 0;
  std::vector<Vec> vertices;
  std::vector<Vec> rays;

  bool is_empty() const { return vertices.empty(); }

  static VPolyhedron cone(std::size_t dim, std::vector<Vec> rays) { return VPolyhedron{dim, {zeros(dim)}, std::move(rays)}; }

  friend bool operator==(const VPolyhedron&, const VPolyhedron&) = default;
};

inline HPolyhedron intersect(const HPolyhedron& p, const HPolyhedron& q)
{
  if (p.dim != q.dim) throw std::invalid_argument("intersect: dimension mismatch");
  HPolyhedron r = p;
  r.inequalities.insert(r.inequalities.end(), q.inequalities.begin(), q.inequalities.end());
  r.equalities.insert(r.equalities.end(), q.equalities.begin(), q.equalities.end());
  return r;
}

inline LpResult minimize_over(const HPolyhedron& p, const Vec& objective)
{
  return minimize(objective, p.inequalities, p.equalities, p.dim);
}

inline bool is_feasible(const HPolyhedron& p)
{
  return feasible_point(p.inequalities, p.equalities, p.dim).has_value();
}

// ---------------------------------------------------------------------------
// Canonical form

namespace detail {

// Subtracts multiples of the echelon rows so the normal vanishes on every
// pivot column. `row` of the echelon form is [normal | offset].
inline void reduce_modulo(Constraint& c, const EchelonForm& eqs)
{
  const std::size_t dim = c.normal.size();
  for (std::size_t i = 0; i < eqs.rows.size(); ++i) {
    const std::size_t p = eqs.pivots[i];
    if (sgn(c.normal[p]) == 0) continue;
    const Rational f = c.normal[p];
    for (std::size_t k = 0; k < dim; ++k) c.normal[k] -= f * eqs.rows[i][k];
    c.offset -= f * eqs.rows[i][dim];
  }
}

inline EchelonForm equality_echelon(const std::vector<Constraint>& eqs, std::size_t dim, bool& consistent)
{
  std::vector<Vec> rows;
  rows.reserve(eqs.size());
  for (const auto& e : eqs) {
    Vec r = e.normal;
    r.push_back(e.offset);
    rows.push_back(std::move(r));
  }
  EchelonForm ef = rref(rows, dim);
  consistent = true;
  // A zero coefficient row with nonzero offset is dropped by rref; detect it
  // by comparing rank with the augmented rank.
  if (rank_of(rows, dim + 1) != ef.pivots.size()) consistent = false;
  return ef;
}

inline void sort_constraints(std::vector<Constraint>& cs)
{
  std::sort(cs.begin(), cs.end(), [](const Constraint& a, const Constraint& b) {
    const auto c = compare_lex(a.normal, b.normal);
    if (c != 0) return c < 0;
    return a.offset < b.offset;
  });
}

}  // namespace detail

/// Canonical H-representation:
///   - equalities in reduced echelon form (pivots on trailing coordinates),
///     each scaled to a primitive integer row with positive pivot;
///   - implicit equalities promoted to equalities;
///   - inequality normals vanish on pivot columns and are primitive integer;
///   - no redundant inequality; constraints sorted by (normal, offset).
/// Two polyhedra are equal as sets iff their canonical forms are identical.
inline HPolyhedron canonicalize(const HPolyhedron& input)
{
  const std::size_t dim = input.dim;
  bool consistent = true;
  EchelonForm eqs = detail::equality_echelon(input.equalities, dim, consistent);
  if (!consistent || !is_feasible(input)) return HPolyhedron::empty(dim);

  auto echelon_constraints = [&](const EchelonForm& e) {
    std::vector<Constraint> out;
    for (const auto& row : e.rows) out.push_back({Vec(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(dim)), row[dim]});
    return out;
  };

  std::vector<Constraint> ineqs;
  auto reduce_all = [&](std::vector<Constraint> src) {
    ineqs.clear();
    for (auto c : src) {
      detail::reduce_modulo(c, eqs);
      if (is_zero(c.normal)) continue;  // feasibility already established, so 0 ≥ α holds
      ineqs.push_back(std::move(c));
    }
  };
  reduce_all(input.inequalities);

  // Promote implicit equalities: inequalities whose maximum over P equals the offset.
  {
    const std::vector<Constraint> eq_list = echelon_constraints(eqs);
    std::vector<Constraint> implicit;
    for (const auto& c : ineqs) {
      const LpResult r = minimize(scale(c.normal, -1), ineqs, eq_list, dim);
      if (r.status == LpStatus::optimal && -r.value == c.offset) implicit.push_back(c);
    }
    if (!implicit.empty()) {
      std::vector<Constraint> all_eq = eq_list;
      all_eq.insert(all_eq.end(), implicit.begin(), implicit.end());
      eqs = detail::equality_echelon(all_eq, dim, consistent);
      reduce_all(ineqs);
    }
  }

  // Primitive scaling and duplicate removal (keep the tightest offset).
  std::map<Vec, Rational, LexLess> tightest;
  for (auto& c : ineqs) {
    const Rational f = primitive_factor(c.normal);
    Vec n = scale(c.normal, f);
    Rational off = c.offset * f;
    auto it = tightest.find(n);
    if (it == tightest.end()) tightest.emplace(std::move(n), std::move(off));
    else if (off > it->second) it->second = off;
  }
  ineqs.clear();
  for (auto& [n, off] : tightest) ineqs.push_back({n, off});

  const std::vector<Constraint> eq_list = echelon_constraints(eqs);
  for (std::size_t i = 0; i < ineqs.size();) {
    std::vector<Constraint> others;
    others.reserve(ineqs.size() - 1);
    for (std::size_t j = 0; j < ineqs.size(); ++j) {
      if (j != i) others.push_back(ineqs[j]);
    }
    const LpResult r = minimize(ineqs[i].normal, others, eq_list, dim);
    if (r.status == LpStatus::optimal && r.value >= ineqs[i].offset) {
      ineqs.erase(ineqs.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  HPolyhedron out;
  out.dim = dim;
  out.inequalities = std::move(ineqs);
  for (const auto& e : eq_list) {
    const Rational f = primitive_factor(e.normal);
    out.equalities.push_back({scale(e.normal, f), e.offset * f});
  }
  detail::sort_constraints(out.inequalities);
  detail::sort_constraints(out.equalities);
  return out;
}

inline bool is_empty(const HPolyhedron& p) { return !is_feasible(p); }

/// Set equality via canonical forms.
inline bool same_set(const HPolyhedron& a, const HPolyhedron& b)
{
  return a.dim == b.dim && canonicalize(a) == canonicalize(b);
}

/// a ⊆ b, decided by one LP per constraint of b.
inline bool is_subset(const HPolyhedron& a, const HPolyhedron& b)
{
  if (a.dim != b.dim) throw std::invalid_argument("is_subset: dimension mismatch");
  if (!is_feasible(a)) return true;
  for (const auto& c : b.inequalities) {
    const LpResult r = minimize_over(a, c.normal);
    if (r.status != LpStatus::optimal || r.value < c.offset) return false;
  }
  for (const auto& c : b.equalities) {
    const LpResult lo = minimize_over(a, c.normal);
    const LpResult hi = minimize_over(a, scale(c.normal, -1));
    if (lo.status != LpStatus::optimal || hi.status != LpStatus::optimal) return false;
    if (lo.value != c.offset || -hi.value != c.offset) return false;
  }
  return true;
}

/// {x + shift : x ∈ p}.
inline HPolyhedron translate(const HPolyhedron& p, const Vec& shift)
{
  HPolyhedron r = p;
  for (auto& c : r.inequalities) c.offset += dot(c.normal, shift);
  for (auto& c : r.equalities) c.offset += dot(c.normal, shift);
  return r;
}

// ---------------------------------------------------------------------------
// Fourier–Motzkin projection

/// Projects `p` onto the coordinates not listed in `var_indices`; the
/// result lives in dimension dim - |var_indices| with the surviving
/// coordinates in their original order. Canonicalizes after every step.
inline HPolyhedron fm_eliminate(const HPolyhedron& p, const std::vector<std::size_t>& var_indices)
{
  const std::set<std::size_t> vars(var_indices.begin(), var_indices.end());
  for (auto v : vars) {
    if (v >= p.dim) throw std::out_of_range("fm_eliminate: variable index out of range");
  }
  HPolyhedron cur = canonicalize(p);
  std::set<std::size_t> remaining = vars;
  while (!remaining.empty()) {
    if (!is_feasible(cur)) {
      cur = HPolyhedron::empty(p.dim);
      break;
    }
    // Prefer a variable pinned by an equality (exact substitution), otherwise
    // the one with the smallest pos*neg product.
    std::size_t best = *remaining.begin();
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    bool best_has_eq = false;
    for (auto v : remaining) {
      const bool has_eq = std::any_of(cur.equalities.begin(), cur.equalities.end(),
                                      [&](const Constraint& c) { return sgn(c.normal[v]) != 0; });
      std::size_t pos = 0, neg = 0;
      for (const auto& c : cur.inequalities) {
        pos += sgn(c.normal[v]) > 0;
        neg += sgn(c.normal[v]) < 0;
      }
      const std::size_t cost = pos * neg;
      if ((has_eq && !best_has_eq) || (has_eq == best_has_eq && cost < best_cost)) {
        best = v;
        best_cost = cost;
        best_has_eq = has_eq;
      }
    }
    remaining.erase(best);
    const std::size_t v = best;

    HPolyhedron next;
    next.dim = cur.dim;
    auto pinned = std::find_if(cur.equalities.begin(), cur.equalities.end(),
                               [&](const Constraint& c) { return sgn(c.normal[v]) != 0; });
    if (pinned != cur.equalities.end()) {
      const Constraint piv = *pinned;
      auto substitute = [&](Constraint c) {
        if (sgn(c.normal[v]) != 0) {
          const Rational f = c.normal[v] / piv.normal[v];
          for (std::size_t k = 0; k < c.normal.size(); ++k) c.normal[k] -= f * piv.normal[k];
          c.offset -= f * piv.offset;
        }
        return c;
      };
      for (const auto& c : cur.inequalities) next.inequalities.push_back(substitute(c));
      for (auto it = cur.equalities.begin(); it != cur.equalities.end(); ++it) {
        if (it != pinned) next.equalities.push_back(substitute(*it));
      }
    } else {
      next.equalities = cur.equalities;
      std::vector<const Constraint*> pos, neg;
      for (const auto& c : cur.inequalities) {
        const int s = sgn(c.normal[v]);
        if (s > 0) pos.push_back(&c);
        else if (s < 0) neg.push_back(&c);
        else next.inequalities.push_back(c);
      }
      for (const Constraint* a : pos) {
        for (const Constraint* b : neg) {
          const Rational wa = -b->normal[v];
          const Rational wb = a->normal[v];
          Constraint c;
          c.normal.resize(cur.dim);
          for (std::size_t k = 0; k < cur.dim; ++k) c.normal[k] = wa * a->normal[k] + wb * b->normal[k];
          c.normal[v] = 0;
          c.offset = wa * a->offset + wb * b->offset;
          next.inequalities.push_back(std::move(c));
        }
      }
    }
    cur = canonicalize(next);
  }

  // Drop eliminated columns.
  HPolyhedron out;
  out.dim = p.dim - vars.size();
  auto drop = [&](const Constraint& c) {
    Constraint d;
    d.offset = c.offset;
    for (std::size_t k = 0; k < c.normal.size(); ++k) {
      if (!vars.count(k)) d.normal.push_back(c.normal[k]);
    }
    return d;
  };
  for (const auto& c : cur.inequalities) out.inequalities.push_back(drop(c));
  for (const auto& c : cur.equalities) out.equalities.push_back(drop(c));
  return canonicalize(out);
}

// ---------------------------------------------------------------------------
// Minkowski sums and V-to-H conversion

/// P + Cone(C.rays), via the lift x = y + Σ t_k r_k, t ≥ 0, then elimination of t.
inline HPolyhedron minkowski_sum_with_cone(const HPolyhedron& p, const VPolyhedron& cone)
{
  if (p.dim != cone.dim) throw std::invalid_argument("minkowski_sum_with_cone: dimension mismatch");
  for (const auto& v : cone.vertices) {
    if (!is_zero(v)) throw std::invalid_argument("minkowski_sum_with_cone: cone has a vertex other than the origin");
  }
  if (cone.is_empty()) return HPolyhedron::empty(p.dim);
  const std::size_t n = p.dim;
  const std::size_t k = cone.rays.size();
  if (k == 0) return canonicalize(p);
  HPolyhedron lifted;
  lifted.dim = n + k;
  // Substituting y = x - Σ t_k r_k: ⟨a, y⟩ = ⟨a, x⟩ - Σ t_k ⟨a, r_k⟩.
  auto lift = [&](const Constraint& c) {
    Constraint l;
    l.normal = c.normal;
    for (const auto& r : cone.rays) l.normal.push_back(-dot(c.normal, r));
    l.offset = c.offset;
    return l;
  };
  for (const auto& c : p.inequalities) lifted.inequalities.push_back(lift(c));
  for (const auto& c : p.equalities) lifted.equalities.push_back(lift(c));
  for (std::size_t j = 0; j < k; ++j) lifted.add_ge(unit(n + k, n + j), 0);
  std::vector<std::size_t> t_vars(k);
  std::iota(t_vars.begin(), t_vars.end(), n);
  return fm_eliminate(lifted, t_vars);
}

inline VPolyhedron vertices_and_rays(const HPolyhedron& p);

/// H-representation of Conv(vertices) + Cone(rays). The valid inequalities
/// ⟨a, x⟩ ≥ b form the cone {(a, b) : ⟨a, v⟩ ≥ b, ⟨a, r⟩ ≥ 0}; its extreme rays
/// give the facets and its lineality gives the equalities of the affine hull.
inline HPolyhedron to_hrep(const VPolyhedron& v)
{
  const std::size_t n = v.dim;
  if (v.is_empty()) return HPolyhedron::empty(n);
  HPolyhedron dual;
  dual.dim = n + 1;
  for (const auto& x : v.vertices) {
    Vec row = x;
    row.push_back(-1);
    dual.add_ge(std::move(row), 0);
  }
  for (const auto& r : v.rays) {
    Vec row = r;
    row.push_back(0);
    dual.add_ge(std::move(row), 0);
  }
  const VPolyhedron gens = vertices_and_rays(dual);
  std::set<Vec, LexLess> rays(gens.rays.begin(), gens.rays.end());
  HPolyhedron out;
  out.dim = n;
  for (const auto& g : gens.rays) {
    Vec a(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n));
    const Rational b = g[n];
    if (is_zero(a)) continue;  // 0 ≥ b with b ≤ 0
    if (rays.count(scale(g, -1))) {
      if (compare_lex(g, scale(g, -1)) > 0) out.add_eq(std::move(a), b);
    } else {
      out.add_ge(std::move(a), b);
    }
  }
  return canonicalize(out);
}

// ---------------------------------------------------------------------------
// Vertex / ray enumeration

namespace detail {

inline void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f)
{
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void sort_desc_unique(std::vector<Vec>& vs)
{
  std::sort(vs.begin(), vs.end(), [](const Vec& a, const Vec& b) { return compare_lex(a, b) > 0; });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

/// Affine parametrization x = base + Σ_f u_f · direction_f of the affine hull
/// given by the canonical equalities (free coordinates are the non-pivot columns).
struct AffineChart {
  std::vector<std::size_t> free_cols;
  EchelonForm eqs;
  std::size_t dim = 0;

  Vec lift_point(const Vec& u) const
  {
    Vec x = zeros(dim);
    for (std::size_t i = 0; i < free_cols.size(); ++i) x[free_cols[i]] = u[i];
    for (std::size_t r = 0; r < eqs.rows.size(); ++r) {
      Rational s = eqs.rows[r][dim];
      for (std::size_t i = 0; i < free_cols.size(); ++i) s -= eqs.rows[r][free_cols[i]] * u[i];
      x[eqs.pivots[r]] = s;
    }
    return x;
  }

  Vec lift_direction(const Vec& u) const
  {
    Vec x = zeros(dim);
    for (std::size_t i = 0; i < free_cols.size(); ++i) x[free_cols[i]] = u[i];
    for (std::size_t r = 0; r < eqs.rows.size(); ++r) {
      Rational s = 0;
      for (std::size_t i = 0; i < free_cols.size(); ++i) s -= eqs.rows[r][free_cols[i]] * u[i];
      x[eqs.pivots[r]] = s;
    }
    return x;
  }

  Vec restrict(const Vec& normal) const
  {
    Vec r;
    for (auto c : free_cols) r.push_back(normal[c]);
    return r;
  }
};

inline AffineChart chart_of(const HPolyhedron& canonical)
{
  AffineChart ch;
  ch.dim = canonical.dim;
  bool consistent = true;
  ch.eqs = equality_echelon(canonical.equalities, canonical.dim, consistent);
  std::vector<bool> pivot(canonical.dim, false);
  for (auto p : ch.eqs.pivots) pivot[p] = true;
  for (std::size_t c = 0; c < canonical.dim; ++c) {
    if (!pivot[c]) ch.free_cols.push_back(c);
  }
  return ch;
}

}  // namespace detail

/// All extreme points and extreme rays. Lineality directions, if any, are
/// reported as opposite ray pairs and the vertices are those of P ∩ L^⊥.
/// Brute force over active sets; intended for effective dimension ≤ 8.
inline VPolyhedron vertices_and_rays(const HPolyhedron& p)
{
  const HPolyhedron q = canonicalize(p);
  VPolyhedron out;
  out.dim = p.dim;
  if (!is_feasible(q)) return out;

  const detail::AffineChart ch = detail::chart_of(q);
  const std::size_t f = ch.free_cols.size();
  std::vector<Vec> a;
  std::vector<Rational> alpha;
  for (const auto& c : q.inequalities) {
    a.push_back(ch.restrict(c.normal));  // canonical normals vanish on pivot columns
    alpha.push_back(c.offset);
  }
  const std::vector<Vec> lineality = nullspace(a, f);
  const std::size_t m = a.size();
  const std::size_t k_vertex = f - lineality.size();

  auto satisfies = [&](const Vec& u) {
    for (std::size_t i = 0; i < m; ++i) {
      if (dot(a[i], u) < alpha[i]) return false;
    }
    for (const auto& l : lineality) {
      if (sgn(dot(l, u)) != 0) return false;
    }
    return true;
  };

  const bool is_cone = std::all_of(alpha.begin(), alpha.end(), [](const Rational& x) { return sgn(x) == 0; }) &&
                       std::all_of(q.equalities.begin(), q.equalities.end(), [](const Constraint& c) { return sgn(c.offset) == 0; });
  if (is_cone) {
    out.vertices.push_back(zeros(p.dim));
  } else {
    detail::for_each_subset(m, k_vertex, [&](const std::vector<std::size_t>& idx) {
      std::vector<Vec> rows = lineality;
      Vec rhs(lineality.size(), Rational(0));
      for (auto i : idx) {
        rows.push_back(a[i]);
        rhs.push_back(alpha[i]);
      }
      const auto u = solve_unique(rows, rhs, f);
      if (u && satisfies(*u)) out.vertices.push_back(ch.lift_point(*u));
    });
  }

  if (k_vertex >= 1) {
    detail::for_each_subset(m, k_vertex - 1, [&](const std::vector<std::size_t>& idx) {
      std::vector<Vec> rows = lineality;
      for (auto i : idx) rows.push_back(a[i]);
      const std::vector<Vec> ns = nullspace(rows, f);
      if (ns.size() != 1) return;
      for (int sign : {1, -1}) {
        const Vec d = scale(ns[0], sign);
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) ok = sgn(dot(a[i], d)) >= 0;
        if (ok) out.rays.push_back(primitive(ch.lift_direction(d)));
      }
    });
  }
  for (const auto& l : lineality) {
    const Vec d = primitive(ch.lift_direction(l));
    out.rays.push_back(d);
    out.rays.push_back(scale(d, -1));
  }
  detail::sort_desc_unique(out.vertices);
  detail::sort_desc_unique(out.rays);
  return out;
}

/// The homogenized constraint system {v : ⟨a, v⟩ ≥ 0, ⟨e, v⟩ = 0}.
inline HPolyhedron recession_hrep(const HPolyhedron& p)
{
  if (!is_feasible(p)) throw std::invalid_argument("recession cone of an empty polyhedron");
  HPolyhedron r;
  r.dim = p.dim;
  for (const auto& c : p.inequalities) r.add_ge(c.normal, 0);
  for (const auto& c : p.equalities) r.add_eq(c.normal, 0);
  return canonicalize(r);
}

inline VPolyhedron recession_cone(const HPolyhedron& p)
{
  VPolyhedron v = vertices_and_rays(recession_hrep(p));
  v.vertices = {zeros(p.dim)};
  return v;
}

// ---------------------------------------------------------------------------
// Membership

struct Membership {
  bool inside = false;
  double worst_violation = 0.0;  // max over constraints of the amount violated, ≥ 0
  std::size_t active = 0;        // constraints holding with equality (exact path only)
};

inline Membership contains(const HPolyhedron& p, const Vec& x)
{
  if (x.size() != p.dim) throw std::invalid_argument("contains: dimension mismatch");
  Membership m;
  m.inside = true;
  Rational worst = 0;
  for (const auto& c : p.inequalities) {
    const Rational s = dot(c.normal, x);
    if (s < c.offset) {
      m.inside = false;
      if (c.offset - s > worst) worst = c.offset - s;
    } else if (s == c.offset) {
      ++m.active;
    }
  }
  for (const auto& c : p.equalities) {
    const Rational s = dot(c.normal, x);
    if (s != c.offset) {
      m.inside = false;
      Rational d = abs(s - c.offset);
      if (d > worst) worst = d;
    } else {
      ++m.active;
    }
  }
  m.worst_violation = worst.get_d();
  return m;
}

/// Floating-point membership: inside iff every constraint is violated by at most tol.
inline Membership contains(const HPolyhedron& p, const std::vector<double>& x, double tol)
{
  if (x.size() != p.dim) throw std::invalid_argument("contains: dimension mismatch");
  Membership m;
  double worst = 0.0;
  auto eval = [&](const Constraint& c) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += c.normal[i].get_d() * x[i];
    return s - c.offset.get_d();
  };
  for (const auto& c : p.inequalities) worst = std::max(worst, -eval(c));
  for (const auto& c : p.equalities) worst = std::max(worst, std::abs(eval(c)));
  m.worst_violation = worst;
  m.inside = worst <= tol;
  return m;
}

// ---------------------------------------------------------------------------
// Lattice points

/// Integer points of P ∩ {⟨functional, x⟩ ≤ bound}, lexicographically ascending.
/// Throws std::domain_error when the truncated region is unbounded.
inline std::vector<Vec> lattice_points(const HPolyhedron& p, const Vec& functional, const Rational& bound)
{
  if (functional.size() != p.dim) throw std::invalid_argument("lattice_points: functional dimension mismatch");
  HPolyhedron t = p;
  t.add_le(functional, bound);
  t = canonicalize(t);
  if (!is_feasible(t)) return {};
  const detail::AffineChart ch = detail::chart_of(t);
  std::vector<Rational> lo, hi;
  for (auto c : ch.free_cols) {
    const LpResult mn = minimize_over(t, unit(p.dim, c));
    const LpResult mx = minimize_over(t, scale(unit(p.dim, c), -1));
    if (mn.status != LpStatus::optimal || mx.status != LpStatus::optimal) {
      throw std::domain_error("lattice_points: truncated region is unbounded");
    }
    lo.push_back(ceil_q(mn.value));
    hi.push_back(floor_q(-mx.value));
  }
  // Pivot coordinates must be bounded too (they are affine in the free ones).
  std::vector<Vec> out;
  const std::size_t f = ch.free_cols.size();
  for (std::size_t i = 0; i < f; ++i) {
    if (lo[i] > hi[i]) return {};
  }
  Vec u(lo.begin(), lo.end());
  while (true) {
    const Vec x = ch.lift_point(u);
    const bool integral = std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.get_den() == 1; });
    if (integral && contains(t, x).inside) out.push_back(x);
    std::size_t i = 0;
    while (i < f) {
      if (u[i] < hi[i]) {
        u[i] += 1;
        break;
      }
      u[i] = lo[i];
      ++i;
    }
    if (i == f) break;
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

}  // namespace orbitsum

#pragma once

// Spectra of sums of two admissible coadjoint orbits:
//   S_AB = (Π + Cone(√-1 Δ⁺_nc)) ∩ t*₊,
// together with the single-orbit torus image and checks of the vertex
// criterion and the recession-cone law.

#include "orbitsum/horn.hpp"

#include <set>
#include <string>
#include <vector>

namespace orbitsum {

struct OrbitSumResult {
  RealFormData form;
  Spectrum lambda_a;
  Spectrum lambda_b;
  CompactPolytope pi;
  HPolyhedron s_ab;  // canonical
  VPolyhedron vertices;
  std::vector<Spectrum> weyl_sum_points;  // chamber-sorted w₁·a + w₂·b, descending, unique
  bool exact = false;
};

/// Chamber-sorted sums w₁·a + w₂·b over W_k × W_k.
inline std::vector<Spectrum> weyl_sums(const RealFormData& form, const Spectrum& a, const Spectrum& b)
{
  std::set<Vec, LexLess> pts;
  const auto oa = weyl_orbit(form, a);
  const auto ob = weyl_orbit(form, b);
  for (const auto& x : oa) {
    for (const auto& y : ob) pts.insert(chamber_sort(form, add(x.coords, y.coords)));
  }
  std::vector<Spectrum> out;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) out.push_back(Spectrum{*it});
  return out;
}

inline OrbitSumResult sum_spectra(const RealFormData& form, const Spectrum& a, const Spectrum& b)
{
  validate_orbit_input(form, a, "A");
  validate_orbit_input(form, b, "B");
  OrbitSumResult r;
  r.form = form;
  r.lambda_a = a;
  r.lambda_b = b;
  r.pi = compact_polytope(form, a, b);
  r.exact = r.pi.exact;
  const HPolyhedron swept = minkowski_sum_with_cone(r.pi.hrep, noncompact_cone(form));
  r.s_ab = canonicalize(intersect(swept, form.chamber_hrep()));
  r.vertices = vertices_and_rays(r.s_ab);
  r.weyl_sum_points = weyl_sums(form, a, b);
  return r;
}

/// Torus moment image of one orbit: Conv(W_k·x) + Cone(Δ⁺_nc), no chamber cut.
inline HPolyhedron orbit_image(const RealFormData& form, const Spectrum& x)
{
  check_dimension(form, x);
  // Admissibility is W_k-invariant, so validating the chamber representative suffices.
  validate_orbit_input(form, Spectrum{chamber_sort(form, x.coords)}, "X");
  VPolyhedron v;
  v.dim = form.ambient_dim;
  for (const auto& s : weyl_orbit(form, x)) v.vertices.push_back(s.coords);
  v.rays = noncompact_cone(form).rays;
  return intersect(to_hrep(v), form.trace_hrep());
}

/// Σ over Δ⁺_nc of ⟨x, α⟩: depth into the non-compact cone. For su(p,q) on
/// the trace-zero hyperplane this is (p+q)·Σλ.
inline Vec default_truncation_functional(const RealFormData& form)
{
  Vec f = zeros(form.ambient_dim);
  for (const auto& r : form.noncompact_roots()) f = add(f, r);
  return f;
}

/// Integer points of S_AB with ⟨functional, x⟩ ≤ bound.
inline std::vector<Vec> lattice_points(const OrbitSumResult& r, const Vec& functional, const Rational& bound)
{
  return lattice_points(r.s_ab, functional, bound);
}

inline std::vector<Vec> lattice_points(const OrbitSumResult& r, const Rational& bound)
{
  return lattice_points(r.s_ab, default_truncation_functional(r.form), bound);
}

// ---------------------------------------------------------------------------
// Checks

struct VertexCheck {
  Vec vertex;
  bool open_chamber = false;  // all chamber inequalities strict
  bool is_weyl_sum = false;
};

struct VertexCriterionReport {
  std::vector<VertexCheck> vertices;
  bool holds = true;  // every open-chamber vertex is a Weyl sum
};

inline VertexCriterionReport check_vertex_criterion(const OrbitSumResult& r)
{
  std::set<Vec, LexLess> sums;
  for (const auto& s : r.weyl_sum_points) sums.insert(s.coords);
  VertexCriterionReport rep;
  for (const auto& v : r.vertices.vertices) {
    VertexCheck c{v, in_open_chamber(r.form, v), sums.count(v) > 0};
    if (c.open_chamber && !c.is_weyl_sum) rep.holds = false;
    rep.vertices.push_back(std::move(c));
  }
  return rep;
}

struct RecessionReport {
  VPolyhedron observed;  // recession cone of S_AB
  VPolyhedron expected;  // Cone(Δ⁺_nc) ∩ rec(t*₊)
  bool holds = false;
};

/// H-description of Cone(Δ⁺_nc) ∩ rec(t*₊) on the trace-zero subspace.
inline HPolyhedron expected_recession_hrep(const RealFormData& form)
{
  return canonicalize(intersect(to_hrep(noncompact_cone(form)), form.chamber_hrep()));
}

inline RecessionReport check_recession_law(const OrbitSumResult& r)
{
  RecessionReport rep;
  const HPolyhedron observed = recession_hrep(r.s_ab);
  const HPolyhedron expected = expected_recession_hrep(r.form);
  rep.observed = recession_cone(r.s_ab);
  rep.expected = vertices_and_rays(expected);
  rep.holds = is_subset(observed, expected) && is_subset(expected, observed);
  return rep;
}

struct AdmissibilityReport {
  Rational min_vertex_pairing;  // min over vertices and C_min generators of ⟨v, g⟩
  bool closed_ok = false;       // all pairings ≥ 0
  bool strict = false;          // all pairings > 0
};

/// S_AB is emitted as a closed set; this records how it sits relative to
/// the open admissible cone. Recession rays pair non-negatively with every
/// generator, so checking vertices is sufficient.
inline AdmissibilityReport check_admissibility(const OrbitSumResult& r)
{
  AdmissibilityReport rep;
  bool first = true;
  for (const auto& v : r.vertices.vertices) {
    for (const auto& g : r.form.cmin_generators) {
      const Rational s = dot(v, g);
      if (first || s < rep.min_vertex_pairing) rep.min_vertex_pairing = s;
      first = false;
    }
  }
  rep.closed_ok = first || sgn(rep.min_vertex_pairing) >= 0;
  rep.strict = first || sgn(rep.min_vertex_pairing) > 0;
  return rep;
}

}  // namespace orbitsum

#pragma once

// Combinatorial data of a real form of inner type given by a Vogan diagram:
// positive roots, the compact / non-compact split, the cone generators of
// C_min, the compact Weyl chamber and the compact Weyl group action.

#include "orbitsum/polyhedra.hpp"

#include <map>
#include <optional>
#include <queue>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace orbitsum {

/// Raised for inputs that violate a documented precondition (dimension,
/// trace, chamber, admissibility, diagram shape). Messages name the
/// violated condition.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Series { A, B, C, D };

inline char series_letter(Series s) { return "ABCD"[static_cast<int>(s)]; }

struct VoganDiagram {
  Series series = Series::A;
  int rank = 1;
  std::optional<int> painted;  // 1-based index of the painted simple root

  friend bool operator==(const VoganDiagram&, const VoganDiagram&) = default;
};

/// A point of t* in ambient coordinates (for su(p,q): λ-block then μ-block).
struct Spectrum {
  Vec coords;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

struct RealFormData {
  VoganDiagram diagram;
  std::size_t ambient_dim = 0;
  std::vector<Vec> positive_roots;
  std::vector<std::vector<int>> simple_coefficients;  // expansion of each positive root in simple roots
  std::vector<std::size_t> compact_positive;
  std::vector<std::size_t> noncompact_positive;
  std::vector<Vec> cmin_generators;
  std::vector<Vec> chamber;            // ⟨n, x⟩ ≥ 0, compact simple roots
  std::vector<Vec> trace_functionals;  // ⟨n, x⟩ = 0
  std::optional<std::pair<int, int>> block_sizes;

  /// "su(p,q)" for painted type A, "su(n)" for unpainted type A,
  /// otherwise the diagram itself, e.g. "B3[1]".
  std::string designator() const
  {
    if (block_sizes) return "su(" + std::to_string(block_sizes->first) + "," + std::to_string(block_sizes->second) + ")";
    if (diagram.series == Series::A && !diagram.painted) return "su(" + std::to_string(diagram.rank + 1) + ")";
    std::string s(1, series_letter(diagram.series));
    s += std::to_string(diagram.rank);
    s += "[" + (diagram.painted ? std::to_string(*diagram.painted) : std::string("-")) + "]";
    return s;
  }

  /// Name of coordinate i for diagnostics: λᵢ / μⱼ for su(p,q), xᵢ otherwise.
  std::string coordinate_name(std::size_t i) const
  {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    auto sub = [](std::size_t k) {
      std::string s;
      for (char c : std::to_string(k)) s += digits[c - '0'];
      return s;
    };
    if (block_sizes) {
      const auto p = static_cast<std::size_t>(block_sizes->first);
      return i < p ? "λ" + sub(i + 1) : "μ" + sub(i - p + 1);
    }
    return "x" + sub(i + 1);
  }

  HPolyhedron chamber_hrep() const
  {
    HPolyhedron h = HPolyhedron::universe(ambient_dim);
    for (const auto& n : chamber) h.add_ge(n, 0);
    for (const auto& t : trace_functionals) h.add_eq(t, 0);
    return h;
  }

  HPolyhedron trace_hrep() const
  {
    HPolyhedron h = HPolyhedron::universe(ambient_dim);
    for (const auto& t : trace_functionals) h.add_eq(t, 0);
    return h;
  }

  std::vector<Vec> noncompact_roots() const
  {
    std::vector<Vec> out;
    for (auto i : noncompact_positive) out.push_back(positive_roots[i]);
    return out;
  }
};

namespace detail {

inline std::vector<Vec> simple_roots(Series s, int n)
{
  const std::size_t dim = s == Series::A ? static_cast<std::size_t>(n) + 1 : static_cast<std::size_t>(n);
  std::vector<Vec> out;
  for (int k = 0; k < n; ++k) {
    Vec a = zeros(dim);
    const bool last = k == n - 1;
    if (s == Series::A || !last) {
      a[k] = 1;
      a[k + 1] = -1;
    } else if (s == Series::B) {
      a[k] = 1;
    } else if (s == Series::C) {
      a[k] = 2;
    } else {  // D: α_n = e_{n-1} + e_n
      a[k - 1] = 1;
      a[k] = 1;
    }
    out.push_back(std::move(a));
  }
  return out;
}

inline Vec combine(const std::vector<int>& coeffs, const std::vector<Vec>& simple)
{
  Vec v = zeros(simple.front().size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) v = add(v, scale(simple[i], coeffs[i]));
  }
  return v;
}

/// Positive roots in simple-root coordinates, generated height by height
/// from α-strings: for a root β and simple α_i with p = max{k : β - kα_i is a
/// root}, β + α_i is a root iff p - ⟨β, α_i^∨⟩ > 0.
inline std::vector<std::vector<int>> positive_root_coefficients(const std::vector<Vec>& simple)
{
  const std::size_t n = simple.size();
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> level;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    known.insert(c);
    level.push_back(c);
  }
  std::vector<std::vector<int>> all = level;
  while (!level.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : level) {
      const Vec b = combine(beta, simple);
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        while (true) {
          std::vector<int> down = beta;
          down[i] -= p + 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        const Rational pairing = 2 * dot(b, simple[i]) / dot(simple[i], simple[i]);
        if (Rational(p) - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& c : level) {
      known.insert(c);
      all.push_back(c);
    }
  }
  return all;
}

}  // namespace detail

/// s_β(x) = x - 2⟨x,β⟩/⟨β,β⟩ β.
inline Vec reflect(const Vec& x, const Vec& beta)
{
  const Rational f = 2 * dot(x, beta) / dot(beta, beta);
  return sub(x, scale(beta, f));
}

inline RealFormData build_real_form(const VoganDiagram& diagram)
{
  const int n = diagram.rank;
  if (n < 1) throw input_error("Vogan diagram rank must be ≥ 1");
  if (diagram.series == Series::B && n < 2) throw input_error("series B requires rank ≥ 2");
  if (diagram.series == Series::C && n < 2) throw input_error("series C requires rank ≥ 2");
  if (diagram.series == Series::D && n < 4) throw input_error("series D requires rank ≥ 4");
  if (diagram.painted && (*diagram.painted < 1 || *diagram.painted > n)) {
    throw input_error("painted node " + std::to_string(*diagram.painted) + " out of range 1.." + std::to_string(n));
  }

  RealFormData f;
  f.diagram = diagram;
  const std::vector<Vec> simple = detail::simple_roots(diagram.series, n);
  f.ambient_dim = simple.front().size();

  auto coeffs = detail::positive_root_coefficients(simple);
  std::sort(coeffs.begin(), coeffs.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
    const auto& c = coeffs[idx];
    f.positive_roots.push_back(detail::combine(c, simple));
    f.simple_coefficients.push_back(c);
    const int painted_coeff = diagram.painted ? c[static_cast<std::size_t>(*diagram.painted - 1)] : 0;
    if (painted_coeff >= 2) {
      throw input_error("painting is not quasi-Hermitian: a positive root has coefficient " +
                        std::to_string(painted_coeff) + " on the painted node");
    }
    if (painted_coeff == 1) {
      f.noncompact_positive.push_back(idx);
      f.cmin_generators.push_back(primitive(f.positive_roots.back()));
    } else {
      f.compact_positive.push_back(idx);
    }
  }

  // Compact simple roots: compact positive roots that are not a sum of two compact positive roots.
  std::set<std::vector<int>> compact_set;
  for (auto i : f.compact_positive) compact_set.insert(f.simple_coefficients[i]);
  for (auto i : f.compact_positive) {
    const auto& c = f.simple_coefficients[i];
    bool decomposable = false;
    for (const auto& a : compact_set) {
      std::vector<int> rest(c.size());
      bool nonneg = true;
      for (std::size_t k = 0; k < c.size(); ++k) {
        rest[k] = c[k] - a[k];
        nonneg = nonneg && rest[k] >= 0;
      }
      if (nonneg && rest != c && std::any_of(rest.begin(), rest.end(), [](int v) { return v != 0; }) &&
          compact_set.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) f.chamber.push_back(primitive(f.positive_roots[i]));
  }
  std::sort(f.chamber.begin(), f.chamber.end(), [](const Vec& a, const Vec& b) { return compare_lex(a, b) > 0; });

  if (diagram.series == Series::A) {
    f.trace_functionals.push_back(Vec(f.ambient_dim, Rational(1)));
    if (diagram.painted) f.block_sizes = std::make_pair(*diagram.painted, n + 1 - *diagram.painted);
  }
  return f;
}

/// Parses "su(p,q)" (p, q ≥ 1) into the type-A diagram painted at node p.
inline VoganDiagram parse_algebra(const std::string& designator)
{
  static const std::regex re(R"(\s*su\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(designator, m, re)) throw input_error("unsupported algebra designator '" + designator + "' (expected su(p,q))");
  const int p = std::stoi(m[1]);
  const int q = std::stoi(m[2]);
  if (p < 1 || q < 1) throw input_error("su(p,q) requires p, q ≥ 1");
  return VoganDiagram{Series::A, p + q - 1, p};
}

inline RealFormData su(int p, int q) { return build_real_form(VoganDiagram{Series::A, p + q - 1, p}); }

inline void check_dimension(const RealFormData& form, const Spectrum& x)
{
  if (x.coords.size() != form.ambient_dim) {
    throw input_error("dimension mismatch: expected " + std::to_string(form.ambient_dim) + " coordinates, got " +
                      std::to_string(x.coords.size()));
  }
}

/// x ∈ t*_adm: ⟨x, g⟩ > 0 for every generator of C_min.
inline bool is_admissible(const RealFormData& form, const Spectrum& x)
{
  check_dimension(form, x);
  return std::all_of(form.cmin_generators.begin(), form.cmin_generators.end(),
                     [&](const Vec& g) { return sgn(dot(x.coords, g)) > 0; });
}

inline bool in_chamber(const RealFormData& form, const Vec& x)
{
  return std::all_of(form.chamber.begin(), form.chamber.end(), [&](const Vec& n) { return sgn(dot(x, n)) >= 0; });
}

inline bool in_open_chamber(const RealFormData& form, const Vec& x)
{
  return std::all_of(form.chamber.begin(), form.chamber.end(), [&](const Vec& n) { return sgn(dot(x, n)) > 0; });
}

/// Moves x into the compact Weyl chamber by compact simple reflections.
inline Vec chamber_sort(const RealFormData& form, Vec x)
{
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& beta : form.chamber) {
      if (sgn(dot(x, beta)) < 0) {
        x = reflect(x, beta);
        moved = true;
      }
    }
  }
  return x;
}

/// W_k-orbit of x, sorted descending lexicographically.
inline std::vector<Spectrum> weyl_orbit(const RealFormData& form, const Spectrum& x)
{
  check_dimension(form, x);
  std::set<Vec, LexLess> seen{x.coords};
  std::queue<Vec> todo;
  todo.push(x.coords);
  while (!todo.empty()) {
    const Vec cur = todo.front();
    todo.pop();
    for (const auto& beta : form.chamber) {
      Vec nxt = reflect(cur, beta);
      if (seen.insert(nxt).second) todo.push(std::move(nxt));
    }
  }
  std::vector<Spectrum> out;
  for (auto it = seen.rbegin(); it != seen.rend(); ++it) out.push_back(Spectrum{*it});
  return out;
}

/// Cone(√-1 Δ⁺_nc): the non-compact positive roots as rays.
inline VPolyhedron noncompact_cone(const RealFormData& form)
{
  std::vector<Vec> rays = form.noncompact_roots();
  for (auto& r : rays) r = primitive(r);
  detail::sort_desc_unique(rays);
  return VPolyhedron::cone(form.ambient_dim, std::move(rays));
}

/// Checks the W_k-invariance of Δ⁺_nc under every compact simple reflection.
inline bool noncompact_roots_weyl_invariant(const RealFormData& form)
{
  std::set<Vec, LexLess> nc;
  for (const auto& r : form.noncompact_roots()) nc.insert(r);
  for (const auto& r : nc) {
    for (const auto& beta : form.chamber) {
      if (!nc.count(reflect(r, beta))) return false;
    }
  }
  return true;
}

/// Validates a spectrum as an input orbit point: dimension, trace, chamber
/// order, strict admissibility. Throws input_error naming the first failure.
inline void validate_orbit_input(const RealFormData& form, const Spectrum& x, const std::string& label)
{
  check_dimension(form, x);
  for (const auto& t : form.trace_functionals) {
    if (sgn(dot(t, x.coords)) != 0) throw input_error(label + ": trace violation: coordinates sum to " + to_display(dot(t, x.coords)) + ", expected 0");
  }
  for (const auto& n : form.chamber) {
    if (sgn(dot(x.coords, n)) < 0) {
      // Name the two coordinates involved when the wall is e_i - e_j.
      std::size_t i = n.size(), j = n.size();
      for (std::size_t k = 0; k < n.size(); ++k) {
        if (sgn(n[k]) > 0 && i == n.size()) i = k;
        else if (sgn(n[k]) < 0 && j == n.size()) j = k;
      }
      if (i < n.size() && j < n.size()) {
        throw input_error(label + ": chamber violation: " + form.coordinate_name(i) + " < " + form.coordinate_name(j));
      }
      throw input_error(label + ": chamber violation");
    }
  }
  for (const auto& g : form.cmin_generators) {
    if (sgn(dot(x.coords, g)) <= 0) {
      std::size_t i = g.size(), j = g.size();
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (sgn(g[k]) > 0 && i == g.size()) i = k;
        else if (sgn(g[k]) < 0 && j == g.size()) j = k;
      }
      std::string what = label + ": not admissible: pairing with non-compact root is " + to_display(dot(x.coords, g)) + " ≤ 0";
      if (i < g.size() && j < g.size()) what += " (" + form.coordinate_name(i) + " ≤ " + form.coordinate_name(j) + ")";
      throw input_error(what);
    }
  }
}

}  // namespace orbitsum

#pragma once

// JSON encodings. Rationals are "num/den" strings; object keys keep
// insertion order so serialized output is byte-stable.

#include "orbitsum/oracle.hpp"

#include <json.hpp>

#include <cmath>
#include <string>

namespace orbitsum::json_io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kPolyhedronSchema = "orbitsum.polyhedron/1";
inline constexpr const char* kResultSchema = "orbitsum.result/1";
inline constexpr const char* kSampleSchema = "orbitsum.sample_report/1";
inline constexpr const char* kLatticeSchema = "orbitsum.lattice/1";
inline constexpr const char* kHornSchema = "orbitsum.horn/1";
inline constexpr const char* kPlotSchema = "orbitsum.plot_data/1";

inline Json encode(const Vec& v)
{
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline Json encode(const std::vector<Vec>& vs)
{
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(encode(v));
  return a;
}

inline Vec decode_vec(const Json& j)
{
  if (!j.is_array()) throw input_error("expected an array of rationals");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_string()) throw input_error("rationals must be encoded as \"num/den\" strings");
    v.push_back(parse_rational(x.get<std::string>()));
  }
  return v;
}

inline Json encode(const Constraint& c)
{
  Json j;
  j["normal"] = encode(c.normal);
  j["offset"] = to_string(c.offset);
  return j;
}

/// {"schema", "dim", "inequalities": [{normal, offset}], "equalities": [...]}
/// with inequality semantics ⟨normal, x⟩ ≥ offset.
inline Json encode(const HPolyhedron& h)
{
  Json j;
  j["schema"] = kPolyhedronSchema;
  j["kind"] = "H";
  j["dim"] = h.dim;
  j["inequalities"] = Json::array();
  for (const auto& c : h.inequalities) j["inequalities"].push_back(encode(c));
  j["equalities"] = Json::array();
  for (const auto& c : h.equalities) j["equalities"].push_back(encode(c));
  return j;
}

inline HPolyhedron decode_hpolyhedron(const Json& j)
{
  // Accept either a bare polyhedron or a result report carrying one.
  const Json& h = j.contains("s_ab") ? j.at("s_ab") : j;
  if (!h.contains("dim") || !h.contains("inequalities")) throw input_error("not an H-polyhedron document");
  HPolyhedron p;
  p.dim = h.at("dim").get<std::size_t>();
  auto read = [&](const Json& arr, std::vector<Constraint>& out) {
    for (const auto& c : arr) {
      Constraint k{decode_vec(c.at("normal")), parse_rational(c.at("offset").get<std::string>())};
      if (k.normal.size() != p.dim) throw input_error("constraint normal has wrong dimension");
      out.push_back(std::move(k));
    }
  };
  read(h.at("inequalities"), p.inequalities);
  if (h.contains("equalities")) read(h.at("equalities"), p.equalities);
  return p;
}

inline Json encode(const VPolyhedron& v)
{
  Json j;
  j["schema"] = kPolyhedronSchema;
  j["kind"] = "V";
  j["dim"] = v.dim;
  j["empty"] = v.is_empty();
  j["vertices"] = encode(v.vertices);
  j["rays"] = encode(v.rays);
  return j;
}

inline Json encode(const Spectrum& s) { return encode(s.coords); }

inline Json encode(const RealFormData& f)
{
  Json j;
  j["algebra"] = f.designator();
  j["series"] = std::string(1, series_letter(f.diagram.series));
  j["rank"] = f.diagram.rank;
  j["painted"] = f.diagram.painted ? Json(*f.diagram.painted) : Json(nullptr);
  j["ambient_dim"] = f.ambient_dim;
  j["positive_roots"] = encode(f.positive_roots);
  j["compact_positive"] = f.compact_positive;
  j["noncompact_positive"] = f.noncompact_positive;
  j["cmin_generators"] = encode(f.cmin_generators);
  j["chamber"] = encode(f.chamber);
  j["trace_functionals"] = encode(f.trace_functionals);
  j["block_sizes"] = f.block_sizes ? Json::array({f.block_sizes->first, f.block_sizes->second}) : Json(nullptr);
  return j;
}

inline Json encode(const HornTriple& t)
{
  Json j;
  j["n"] = t.n;
  j["r"] = t.r;
  j["I"] = t.I;
  j["J"] = t.J;
  j["K"] = t.K;
  return j;
}

inline Json encode(const VertexCriterionReport& r)
{
  Json j;
  j["holds"] = r.holds;
  j["vertices"] = Json::array();
  for (const auto& v : r.vertices) {
    Json e;
    e["vertex"] = encode(v.vertex);
    e["classification"] = v.open_chamber ? "open-chamber" : "wall";
    e["is_weyl_sum"] = v.is_weyl_sum;
    j["vertices"].push_back(std::move(e));
  }
  return j;
}

inline Json encode(const RecessionReport& r)
{
  Json j;
  j["holds"] = r.holds;
  j["observed_rays"] = encode(r.observed.rays);
  j["expected_rays"] = encode(r.expected.rays);
  return j;
}

inline Json encode(const AdmissibilityReport& r)
{
  Json j;
  j["min_vertex_pairing"] = to_string(r.min_vertex_pairing);
  j["closed"] = r.closed_ok;
  j["strict"] = r.strict;
  return j;
}

/// Full report for one sum: inputs, Π, canonical S_AB, V-form, Weyl sums, checks.
inline Json encode(const OrbitSumResult& r)
{
  Json j;
  j["schema"] = kResultSchema;
  j["algebra"] = r.form.designator();
  j["lambda_a"] = encode(r.lambda_a);
  j["lambda_b"] = encode(r.lambda_b);
  j["exact"] = r.exact;
  j["pi"] = encode(r.pi.hrep);
  j["s_ab"] = encode(r.s_ab);
  j["vertices"] = encode(r.vertices);
  Json sums = Json::array();
  for (const auto& s : r.weyl_sum_points) sums.push_back(encode(s));
  j["weyl_sum_points"] = std::move(sums);
  Json checks;
  if (r.exact) {
    checks["vertex_criterion"] = encode(check_vertex_criterion(r));
    checks["recession_law"] = encode(check_recession_law(r));
  } else {
    checks["vertex_criterion"] = nullptr;
    checks["recession_law"] = nullptr;
  }
  checks["admissibility"] = encode(check_admissibility(r));
  j["checks"] = std::move(checks);
  return j;
}

/// Floats are written with enough digits to round-trip; non-finite values become null.
inline Json encode_double(double x)
{
  if (!std::isfinite(x)) return nullptr;
  return x;
}

inline Json encode(const SampleReport& r)
{
  Json j;
  j["schema"] = kSampleSchema;
  j["total"] = r.total;
  j["inside"] = r.inside;
  j["worst_violation"] = encode_double(r.worst_violation);
  j["worst_sample_seed"] = r.worst_sample_seed;
  j["imag_residual_max"] = encode_double(r.imag_residual_max);
  j["gap_min"] = encode_double(r.gap_min);
  j["master_seed"] = r.master_seed;
  j["tol"] = r.tol;
  j["scales"] = r.scales;
  return j;
}

}  // namespace orbitsum::json_io

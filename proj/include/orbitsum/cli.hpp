#pragma once

// Command-line front end. run_cli() is the whole program; the executable in
// tools/ only forwards argv and the standard streams.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input, 3 containment
// violations found by `verify`.

#include "orbitsum/json_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace orbitsum::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalidInput = 2, kViolations = 3 };

struct RunConfig {
  std::string algebra;
  std::string a;
  std::string b;
  long long samples = 10000;
  std::uint64_t seed = 0;
  double tol = 1e-6;
  std::string truncate;
  std::string functional;
  std::string out;
  std::string plot_data;
  std::string polyhedron;
  int horn_n = 0;
  int horn_r = 0;
};

namespace detail {

inline void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  // Write-then-rename so readers never observe a partial file.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write to " + tmp + " failed");
  }
  std::filesystem::rename(tmp, path);
}

inline std::string dump(const json_io::Json& j) { return j.dump(2) + "\n"; }

inline Spectrum parse_spectrum(const std::string& text, const char* flag)
{
  if (text.empty()) throw input_error(std::string("missing required option ") + flag);
  try {
    return Spectrum{parse_rational_list(text)};
  } catch (const std::invalid_argument& e) {
    throw input_error(std::string(flag) + ": " + e.what() + " (spectra are exact rationals such as 7/2,1,-9/2)");
  }
}

inline RealFormData parse_form(const std::string& algebra)
{
  if (algebra.empty()) throw input_error("missing required option --algebra");
  return build_real_form(parse_algebra(algebra));
}

inline json_io::Json plot_data(const OrbitSumResult& r, std::size_t samples, std::uint64_t seed)
{
  json_io::Json j;
  j["schema"] = json_io::kPlotSchema;
  j["algebra"] = r.form.designator();
  j["vertices"] = json_io::encode(r.vertices.vertices);
  j["rays"] = json_io::encode(r.vertices.rays);
  j["weyl_sum_points"] = json_io::Json::array();
  for (const auto& s : r.weyl_sum_points) j["weyl_sum_points"].push_back(json_io::encode(s));
  j["sample_seed"] = seed;
  json_io::Json cloud = json_io::Json::array();
  const SamplingOptions opts;
  for (std::size_t i = 0; i < samples; ++i) {
    const FloatSpectrum s = sample_sum_spectrum(r.form, r.lambda_a, r.lambda_b, mix_seed(seed, i), opts.scales[i % opts.scales.size()]);
    cloud.push_back(s.coords);
  }
  j["sample_cloud"] = std::move(cloud);
  return j;
}

inline int cmd_polytope(const RunConfig& c, std::ostream& out)
{
  const RealFormData form = parse_form(c.algebra);
  const OrbitSumResult r = sum_spectra(form, parse_spectrum(c.a, "--a"), parse_spectrum(c.b, "--b"));
  write_output(c.out, dump(json_io::encode(r)), out);
  if (!c.plot_data.empty()) {
    const std::size_t n = c.samples > 0 ? static_cast<std::size_t>(std::min<long long>(c.samples, 2000)) : 2000;
    write_output(c.plot_data, dump(plot_data(r, n, c.seed)), out);
  }
  return kOk;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out)
{
  if (c.samples < 1) throw input_error("invalid sample count " + std::to_string(c.samples) + " (must be ≥ 1)");
  if (!(c.tol >= 0.0)) throw input_error("invalid tolerance (must be ≥ 0)");
  const RealFormData form = parse_form(c.algebra);
  const Spectrum a = parse_spectrum(c.a, "--a");
  const Spectrum b = parse_spectrum(c.b, "--b");
  HPolyhedron target;
  if (!c.polyhedron.empty()) {
    validate_orbit_input(form, a, "A");
    validate_orbit_input(form, b, "B");
    std::ifstream f(c.polyhedron);
    if (!f) throw input_error("cannot read polyhedron file " + c.polyhedron);
    json_io::Json j;
    try {
      f >> j;
    } catch (const std::exception& e) {
      throw input_error("malformed polyhedron file: " + std::string(e.what()));
    }
    target = json_io::decode_hpolyhedron(j);
  } else {
    target = sum_spectra(form, a, b).s_ab;
  }
  const SampleReport rep = verify_containment(form, a, b, target, static_cast<std::size_t>(c.samples), c.seed, c.tol);
  write_output(c.out, dump(json_io::encode(rep)), out);
  return rep.inside == rep.total ? kOk : kViolations;
}

inline int cmd_lattice(const RunConfig& c, std::ostream& out)
{
  if (c.truncate.empty()) throw input_error("lattice requires --truncate BOUND");
  const RealFormData form = parse_form(c.algebra);
  const OrbitSumResult r = sum_spectra(form, parse_spectrum(c.a, "--a"), parse_spectrum(c.b, "--b"));
  const Rational bound = parse_rational(c.truncate);
  // Default functional: Σλ (the λ-block sum), proportional to the pairing
  // with all non-compact roots on the trace-zero hyperplane.
  Vec functional = zeros(form.ambient_dim);
  if (!c.functional.empty()) {
    functional = parse_rational_list(c.functional);
    if (functional.size() != form.ambient_dim) throw input_error("--functional has wrong dimension");
  } else {
    for (int i = 0; i < form.block_sizes->first; ++i) functional[static_cast<std::size_t>(i)] = 1;
  }
  std::vector<Vec> pts;
  try {
    pts = lattice_points(r, functional, bound);
  } catch (const std::domain_error& e) {
    throw input_error(std::string("unbounded truncation: ") + e.what());
  }
  json_io::Json j;
  j["schema"] = json_io::kLatticeSchema;
  j["algebra"] = form.designator();
  j["lambda_a"] = json_io::encode(r.lambda_a);
  j["lambda_b"] = json_io::encode(r.lambda_b);
  j["functional"] = json_io::encode(functional);
  j["bound"] = to_string(bound);
  j["count"] = pts.size();
  j["points"] = json_io::encode(pts);
  write_output(c.out, dump(j), out);
  return kOk;
}

inline int cmd_orbit_image(const RunConfig& c, std::ostream& out)
{
  const RealFormData form = parse_form(c.algebra);
  const Spectrum x = parse_spectrum(c.a, "--a");
  const HPolyhedron img = canonicalize(orbit_image(form, x));
  json_io::Json j;
  j["schema"] = json_io::kResultSchema;
  j["algebra"] = form.designator();
  j["x"] = json_io::encode(x);
  j["orbit_image"] = json_io::encode(img);
  j["vertices"] = json_io::encode(vertices_and_rays(img));
  write_output(c.out, dump(j), out);
  return kOk;
}

inline int cmd_horn(const RunConfig& c, std::ostream& out)
{
  json_io::Json j;
  j["schema"] = json_io::kHornSchema;
  if (c.horn_n > 0) {
    j["n"] = c.horn_n;
    json_io::Json triples = json_io::Json::array();
    const int r_lo = c.horn_r > 0 ? c.horn_r : 1;
    const int r_hi = c.horn_r > 0 ? c.horn_r : c.horn_n - 1;
    for (int r = r_lo; r <= r_hi; ++r) {
      for (const auto& t : horn_triples(c.horn_n, r)) triples.push_back(json_io::encode(t));
    }
    j["triples"] = std::move(triples);
  }
  if (!c.algebra.empty()) {
    const RealFormData form = parse_form(c.algebra);
    const Spectrum a = parse_spectrum(c.a, "--a");
    const Spectrum b = parse_spectrum(c.b, "--b");
    validate_orbit_input(form, a, "A");
    validate_orbit_input(form, b, "B");
    const CompactPolytope pi = compact_polytope(form, a, b);
    j["algebra"] = form.designator();
    j["exact"] = pi.exact;
    j["pi"] = json_io::encode(pi.hrep);
  }
  if (c.horn_n <= 0 && c.algebra.empty()) throw input_error("horn requires --n N or --algebra with --a/--b");
  write_output(c.out, dump(j), out);
  return kOk;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact spectra of sums of admissible coadjoint orbits"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--algebra", c.algebra, "Real form, e.g. su(2,1)");
    s->add_option("--a", c.a, "Spectrum of A, comma-separated rationals in chamber order");
    s->add_option("--b", c.b, "Spectrum of B, comma-separated rationals in chamber order");
    s->add_option("--out", c.out, "Output path (default stdout)");
  };
  CLI::App* polytope = app.add_subcommand("polytope", "Canonical S_AB with vertices, Weyl sums and checks");
  add_common(polytope);
  polytope->add_option("--emit-plot-data", c.plot_data, "Write vertex/ray/sample-cloud JSON to this path");
  polytope->add_option("--samples", c.samples, "Sample-cloud size for --emit-plot-data (max 2000)");
  polytope->add_option("--seed", c.seed, "Sample-cloud seed");

  CLI::App* verify = app.add_subcommand("verify", "Monte Carlo containment check");
  add_common(verify);
  verify->add_option("--samples", c.samples, "Number of sampled (g, h) pairs")->capture_default_str();
  verify->add_option("--seed", c.seed, "Master seed")->capture_default_str();
  verify->add_option("--tol", c.tol, "Membership tolerance")->capture_default_str();
  verify->add_option("--polyhedron", c.polyhedron, "Test against this H-polyhedron JSON instead of the computed S_AB");

  CLI::App* lattice = app.add_subcommand("lattice", "Integer points of the truncated S_AB");
  add_common(lattice);
  lattice->add_option("--truncate", c.truncate, "Bound on the truncation functional (default functional: λ-block sum)");
  lattice->add_option("--functional", c.functional, "Truncation functional as comma-separated rationals");

  CLI::App* orbit = app.add_subcommand("orbit-image", "Torus image Conv(W_k·X) + Cone(Δ⁺_nc) of one orbit (X via --a)");
  add_common(orbit);

  CLI::App* horn = app.add_subcommand("horn", "Dump Horn triples (--n, --r) and/or the compact polytope Π");
  add_common(horn);
  horn->add_option("--n", c.horn_n, "Block size");
  horn->add_option("--r", c.horn_r, "Subset size (default: all 1 ≤ r < n)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (polytope->parsed()) return detail::cmd_polytope(c, out);
    if (verify->parsed()) return detail::cmd_verify(c, out);
    if (lattice->parsed()) return detail::cmd_lattice(c, out);
    if (orbit->parsed()) return detail::cmd_orbit_image(c, out);
    if (horn->parsed()) return detail::cmd_horn(c, out);
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace orbitsum::cli

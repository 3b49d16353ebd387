// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "horn_oracles.hpp"
#include "properties.hpp"
#include "test_support.hpp"

#include <orbitsum/oracle.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace orbitsum;
using namespace orbitsum::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_s, const std::function<Outcome()>& body)
{
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    o.pass = false;
    o.detail += "; over time limit of " + std::to_string(static_cast<int>(limit_s)) + " s";
  }
  if (!o.pass) ++failures;
  std::ostringstream t;
  t << std::fixed << std::setprecision(secs < 1 ? 3 : 1) << secs << " s";
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << ": " << o.detail << " (" << t.str() << ")"
            << std::endl;
}

std::string sci(double x)
{
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << x;
  return s.str();
}

const Spectrum kA1{to_vec({4, 1, -5})}, kB1{to_vec({2, 1, -3})};
const Spectrum kA2{to_vec({4, 2, 1, -7})}, kB2{to_vec({3, 2, 1, -6})};

// Chamber-sorted sums of all block permutations of a and b.
std::set<Vec, LexLess> permutation_sums(const Vec& a, const Vec& b, int p)
{
  auto perms = [&](const Vec& v) {
    std::vector<Vec> out;
    Vec lam(v.begin(), v.begin() + p), mu(v.begin() + p, v.end());
    std::sort(lam.begin(), lam.end());
    std::sort(mu.begin(), mu.end());
    do {
      Vec m = mu;
      do {
        Vec x = lam;
        x.insert(x.end(), m.begin(), m.end());
        out.push_back(x);
      } while (std::next_permutation(m.begin(), m.end()));
    } while (std::next_permutation(lam.begin(), lam.end()));
    return out;
  };
  std::set<Vec, LexLess> sums;
  for (const auto& x : perms(a)) {
    for (const auto& y : perms(b)) {
      Vec z = add(x, y);
      std::sort(z.begin(), z.begin() + p, std::greater<>());
      std::sort(z.begin() + p, z.end(), std::greater<>());
      sums.insert(z);
    }
  }
  return sums;
}

Outcome example_one()
{
  const OrbitSumResult r = sum_spectra(su(2, 1), kA1, kB1);
  const HPolyhedron golden = hpoly(3, {{1, 0, 0, 5}, {0, 1, 0, 2}, {1, 1, 0, 8}, {1, -1, 0, 0}}, {{1, 1, 1, 0}});
  const bool ok = r.exact && r.s_ab == canonicalize(golden);
  return {ok, ok ? "canonical S_AB equals {λ₁≥5, λ₂≥2, λ₁+λ₂≥8, λ₁≥λ₂, λ₁+λ₂+μ=0} exactly" : "got\n" + show(r.s_ab)};
}

Outcome example_two()
{
  const OrbitSumResult r = sum_spectra(su(2, 2), kA2, kB2);
  const HPolyhedron golden = hpoly(4,
                                   {{1, 0, 0, 0, 6},
                                    {0, 1, 0, 0, 4},
                                    {1, 1, 0, 0, 11},
                                    {1, 1, 1, 0, 6},
                                    {0, 0, -1, 0, -2},
                                    {1, -1, 0, 0, 0},
                                    {0, 0, 1, -1, 0}},
                                   {{1, 1, 1, 1, 0}});
  const bool ok = r.exact && r.s_ab == canonicalize(golden);
  return {ok, ok ? "canonical S_AB equals the 7-facet system on the trace-zero hyperplane exactly" : "got\n" + show(r.s_ab)};
}

Outcome su11()
{
  const std::vector<Rational> values{Rational(1), Rational(2), Rational(7, 2), Rational(1, 3), Rational(5, 4)};
  int exact_cases = 0;
  for (const auto& a : values) {
    for (const auto& b : values) {
      const OrbitSumResult r = sum_spectra(su(1, 1), Spectrum{Vec{a, -a}}, Spectrum{Vec{b, -b}});
      HPolyhedron expected(2);
      expected.add_ge(to_vec({1, 0}), a + b);
      expected.add_eq(to_vec({1, 1}), 0);
      if (r.s_ab != canonicalize(expected)) return {false, "exact set wrong for a=" + to_display(a) + ", b=" + to_display(b)};
      ++exact_cases;
    }
  }
  const RealFormData f = su(1, 1);
  const SamplingOptions opts;
  double worst = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < 10000; ++i) {
    const FloatSpectrum s = sample_sum_spectrum(f, Spectrum{to_vec({2, -2})}, Spectrum{to_vec({1, -1})}, mix_seed(77, i),
                                                opts.scales[i % opts.scales.size()]);
    worst = std::max(worst, 3.0 - s.coords[0]);
    ++n;
  }
  const bool ok = worst <= 1e-6;
  return {ok, std::to_string(exact_cases) + " exact (a,b) pairs; " + std::to_string(n) +
                  " samples with max(a+b-c) = " + sci(worst) + " for a=2, b=1"};
}

Outcome monte_carlo()
{
  std::vector<std::pair<std::string, OrbitSumResult>> cases;
  cases.emplace_back("Example 1", sum_spectra(su(2, 1), kA1, kB1));
  cases.emplace_back("Example 2", sum_spectra(su(2, 2), kA2, kB2));
  std::mt19937_64 rng(2718);
  const std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 1}, {2, 2}};
  for (int t = 0; t < 20; ++t) {
    const auto [p, q] = shapes[static_cast<std::size_t>(t) % shapes.size()];
    const Spectrum a = random_admissible(rng, p, q), b = random_admissible(rng, p, q);
    cases.emplace_back("random su(" + std::to_string(p) + "," + std::to_string(q) + ")", sum_spectra(su(p, q), a, b));
  }
  std::size_t total = 0, inside = 0;
  double worst = 0, gap = 1e300, imag = 0;
  std::string first_bad;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const SampleReport rep = verify_containment(cases[k].second, 10000, 1000 + k, 1e-6);
    total += rep.total;
    inside += rep.inside;
    worst = std::max(worst, rep.worst_violation);
    gap = std::min(gap, rep.gap_min);
    imag = std::max(imag, rep.imag_residual_max);
    if (rep.inside != rep.total && first_bad.empty()) first_bad = cases[k].first;
  }
  // Negative control: raise λ₁ ≥ 5 to λ₁ ≥ 11/2.
  HPolyhedron tight = cases[0].second.s_ab;
  tight.add_ge(to_vec({2, 0, 0}), 11);
  const SampleReport ctl = verify_containment(su(2, 1), kA1, kB1, tight, 10000, 999, 1e-6);
  const bool ok = inside == total && ctl.inside < ctl.total && gap > 0;
  std::string d = std::to_string(cases.size()) + " input pairs, " + std::to_string(inside) + "/" + std::to_string(total) +
                  " inside at tol 1e-6, worst violation " + sci(worst) + ", min block gap " + sci(gap) +
                  ", max rel. imag " + sci(imag) + "; tightened control: " + std::to_string(ctl.total - ctl.inside) +
                  "/" + std::to_string(ctl.total) + " violations";
  if (!first_bad.empty()) d += "; first failing case: " + first_bad;
  return {ok, d};
}

Outcome vertex_criterion()
{
  std::size_t open_checked = 0;
  for (auto [form, a, b] : {std::tuple{su(2, 1), kA1, kB1}, std::tuple{su(2, 2), kA2, kB2}}) {
    const OrbitSumResult r = sum_spectra(form, a, b);
    const auto sums = permutation_sums(a.coords, b.coords, form.block_sizes->first);
    for (const auto& v : r.vertices.vertices) {
      if (!in_open_chamber(form, v)) continue;
      ++open_checked;
      if (!sums.count(v)) return {false, "open-chamber vertex " + show(v) + " is not a Weyl sum"};
    }
    if (!check_vertex_criterion(r).holds) return {false, "library check disagrees for " + form.designator()};
  }
  return {open_checked > 0, std::to_string(open_checked) + " open-chamber vertices, all chamber-sorted Weyl sums (permutation oracle)"};
}

Outcome recession_law()
{
  std::vector<OrbitSumResult> rs{sum_spectra(su(2, 1), kA1, kB1), sum_spectra(su(2, 2), kA2, kB2)};
  std::mt19937_64 rng(314);
  const std::vector<std::pair<int, int>> shapes{{2, 1}, {1, 2}, {2, 2}, {3, 1}, {1, 3}};
  for (int t = 0; t < 10; ++t) {
    const auto [p, q] = shapes[static_cast<std::size_t>(t) % shapes.size()];
    rs.push_back(sum_spectra(su(p, q), random_admissible(rng, p, q), random_admissible(rng, p, q)));
  }
  std::size_t held = 0;
  for (const auto& r : rs) held += check_recession_law(r).holds;
  return {held == rs.size(), std::to_string(held) + "/" + std::to_string(rs.size()) +
                                 " inputs with rec(S_AB) = Cone(Δ⁺_nc) ∩ rec(t*₊) by mutual containment"};
}

Outcome horn()
{
  std::mt19937_64 rng(161);
  auto descending = [&](std::size_t n) {
    Vec v = random_point(rng, n, -6, 6, 2);
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  };
  // Containment: 10⁵ sums per block size.
  std::size_t outside = 0, checked = 0;
  double worst = 0;
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Vec a = descending(static_cast<std::size_t>(n)), b = descending(static_cast<std::size_t>(n));
      HPolyhedron h(static_cast<std::size_t>(n));
      add_horn_block(h, 0, a, b);
      const auto ad = to_doubles(a), bd = to_doubles(b);
      for (int s = 0; s < 1000; ++s) {
        const Membership m = contains(h, hermitian_sum_spectrum(ad, bd, random_unitary(rng, n)), 1e-9);
        ++checked;
        outside += !m.inside;
        worst = std::max(worst, m.worst_violation);
      }
    }
  }
  // Tightness at n = 2 on pairs with distinct gaps.
  int tight_pairs = 0;
  double slack = 0;
  while (tight_pairs < 20) {
    const Vec a = descending(2), b = descending(2);
    if (abs((a[0] - a[1]) - (b[0] - b[1])) < Rational(1, 2)) continue;
    ++tight_pairs;
    HPolyhedron h(2);
    add_horn_block(h, 0, a, b);
    h.add_ge(to_vec({1, -1}), 0);
    const HPolyhedron exact = canonicalize(h);
    const auto ad = to_doubles(a), bd = to_doubles(b);
    std::vector<std::vector<double>> pts;
    for (int s = 0; s < 10000; ++s) pts.push_back(hermitian_sum_spectrum(ad, bd, random_unitary(rng, 2)));
    for (const auto& c : exact.inequalities) {
      double best = 1e300;
      for (const auto& x : pts) best = std::min(best, c.normal[0].get_d() * x[0] + c.normal[1].get_d() * x[1] - c.offset.get_d());
      slack = std::max(slack, best);
    }
  }
  // Triple sets against the recursive definition and LR positivity.
  int sets = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int r = 1; r < n; ++r) {
      std::set<std::tuple<Subset, Subset, Subset>> lib;
      for (const auto& t : horn_triples(n, r)) lib.insert({t.I, t.J, t.K});
      if (lib != brute_force_triples(n, r) || lib != lr_triples(n, r)) {
        return {false, "T^" + std::to_string(n) + "_" + std::to_string(r) + " differs from the oracles"};
      }
      ++sets;
    }
  }
  const bool ok = outside == 0 && slack < 1e-2;
  return {ok, std::to_string(checked) + " sampled sums at n=2,3, " + std::to_string(outside) + " outside (worst " + sci(worst) +
                  "); max facet slack at n=2 " + sci(slack) + " over " + std::to_string(tight_pairs) + " pairs; " +
                  std::to_string(sets) + " triple sets match brute force and LR for n ≤ 4"};
}

Outcome orbit_image_check()
{
  const SampleReport rep = verify_orbit_image(su(2, 1), kA1, 10000, 8, 1e-6);
  return {rep.inside == rep.total, std::to_string(rep.inside) + "/" + std::to_string(rep.total) +
                                       " diagonal projections inside orbit_image((4,1,-5)), worst " + sci(rep.worst_violation)};
}

Outcome properties()
{
  std::string why;
  std::vector<std::pair<std::string, std::size_t>> runs{
      {"round-trip", check_round_trip(200, 11, why)},
      {"decomposition", check_decomposition(200, 12, why)},
      {"FM soundness", check_fm_soundness(200, 100, 13, why)},
      {"canonical idempotence", check_canonical_idempotence(200, 14, why)},
  };
  std::size_t bad = 0;
  std::string d;
  for (const auto& [name, f] : runs) {
    bad += f;
    d += (d.empty() ? "" : ", ") + name + " " + std::to_string(200 - f) + "/200";
  }
  if (bad) d += "; first failure:\n" + why;
  return {bad == 0, d};
}

Outcome lattice_note()
{
  const Rational a(3, 2), b(1, 2);
  const OrbitSumResult r = sum_spectra(su(1, 1), Spectrum{Vec{a, -a}}, Spectrum{Vec{b, -b}});
  const auto pts = lattice_points(r, to_vec({1, 0}), 7);
  std::vector<Vec> expected;
  for (int c = 2; c <= 7; ++c) expected.push_back(to_vec({c, -c}));
  return {pts == expected, "su(1,1), a=3/2, b=1/2, c ≤ 7: integer weights " + std::to_string(pts.size()) + " = {a+b, ..., 7}"};
}

}  // namespace

int main()
{
  std::cout << "orbitsum acceptance" << std::endl;
  criterion("1", "Example 1 exact reproduction", 1, example_one);
  criterion("2", "Example 2 exact reproduction", 5, example_two);
  criterion("3", "SU(1,1) reversed triangle inequality", 10, su11);
  criterion("4", "Monte Carlo containment", 120, monte_carlo);
  criterion("5", "Vertex criterion", 0, vertex_criterion);
  criterion("6", "Recession law", 0, recession_law);
  criterion("7", "Horn oracle equivalence", 0, horn);
  criterion("8", "Abelian orbit image", 0, orbit_image_check);
  criterion("9", "Polyhedra engine properties", 0, properties);
  criterion("note", "Truncated lattice for su(1,1)", 0, lattice_note);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}

#pragma once

// The compact-case polytope Π: for su(p,q) the product of two unitary Horn
// problems, one per block, written as exact Horn inequalities.

#include "orbitsum/rootsys.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <tuple>
#include <vector>

namespace orbitsum {

struct HornTriple {
  int n = 0;
  int r = 0;
  std::vector<int> I, J, K;  // strictly increasing, 1-based

  friend auto operator<=>(const HornTriple&, const HornTriple&) = default;
  friend bool operator==(const HornTriple&, const HornTriple&) = default;
};

struct CompactPolytope {
  HPolyhedron hrep;
  bool exact = false;
};

namespace detail {

inline void for_each_index_subset(int n, int r, const std::function<void(const std::vector<int>&)>& f)
{
  for_each_subset(static_cast<std::size_t>(n), static_cast<std::size_t>(r), [&](const std::vector<std::size_t>& idx) {
    std::vector<int> s;
    s.reserve(idx.size());
    for (auto i : idx) s.push_back(static_cast<int>(i) + 1);
    f(s);
  });
}

inline int sum_of(const std::vector<int>& s) { return std::accumulate(s.begin(), s.end(), 0); }

class HornCache {
 public:
  const std::vector<HornTriple>& get(int n, int r)
  {
    auto key = std::make_pair(n, r);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<HornTriple> out;
    const int target_shift = r * (r + 1) / 2;
    // K ranges over r-subsets grouped by their sum.
    std::map<int, std::vector<std::vector<int>>> by_sum;
    for_each_index_subset(n, r, [&](const std::vector<int>& k) { by_sum[sum_of(k)].push_back(k); });
    std::vector<std::vector<int>> subsets;
    for_each_index_subset(n, r, [&](const std::vector<int>& s) { subsets.push_back(s); });
    for (const auto& I : subsets) {
      for (const auto& J : subsets) {
        const auto ks = by_sum.find(sum_of(I) + sum_of(J) - target_shift);
        if (ks == by_sum.end()) continue;
        for (const auto& K : ks->second) {
          if (satisfies_lower(I, J, K, r)) out.push_back(HornTriple{n, r, I, J, K});
        }
      }
    }
    std::sort(out.begin(), out.end());
    return cache_.emplace(key, std::move(out)).first->second;
  }

 private:
  bool satisfies_lower(const std::vector<int>& I, const std::vector<int>& J, const std::vector<int>& K, int r)
  {
    for (int p = 1; p < r; ++p) {
      for (const auto& t : get(r, p)) {
        int lhs = 0, rhs = p * (p + 1) / 2;
        for (int f : t.I) lhs += I[static_cast<std::size_t>(f - 1)];
        for (int g : t.J) lhs += J[static_cast<std::size_t>(g - 1)];
        for (int h : t.K) rhs += K[static_cast<std::size_t>(h - 1)];
        if (lhs > rhs) return false;
      }
    }
    return true;
  }

  std::map<std::pair<int, int>, std::vector<HornTriple>> cache_;
};

}  // namespace detail

/// T^n_r: triples with Σ I + Σ J = Σ K + r(r+1)/2 that satisfy the Horn
/// inequalities of every smaller T^r_p on their own index values.
/// Sorted by (I, J, K). Requires 1 ≤ r < n.
inline std::vector<HornTriple> horn_triples(int n, int r)
{
  if (r < 1 || r >= n) throw input_error("horn_triples requires 1 ≤ r < n (got n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  detail::HornCache cache;
  return cache.get(n, r);
}

/// Horn system for one block: c = spectrum of a+b with a, b, c descending.
/// Coordinates [offset, offset + n) of an ambient vector of length dim.
inline void add_horn_block(HPolyhedron& h, std::size_t offset, const Vec& a, const Vec& b)
{
  const int n = static_cast<int>(a.size());
  Vec trace = zeros(h.dim);
  Rational total = 0;
  for (int k = 0; k < n; ++k) {
    trace[offset + static_cast<std::size_t>(k)] = 1;
    total += a[static_cast<std::size_t>(k)] + b[static_cast<std::size_t>(k)];
  }
  h.add_eq(std::move(trace), total);
  detail::HornCache cache;
  for (int r = 1; r < n; ++r) {
    for (const auto& t : cache.get(n, r)) {
      Vec normal = zeros(h.dim);
      Rational bound = 0;
      for (int k : t.K) normal[offset + static_cast<std::size_t>(k - 1)] = 1;
      for (int i : t.I) bound += a[static_cast<std::size_t>(i - 1)];
      for (int j : t.J) bound += b[static_cast<std::size_t>(j - 1)];
      h.add_le(normal, bound);  // Σ_K c ≤ Σ_I a + Σ_J b
    }
  }
}

namespace detail {

/// Contiguous blocks on which the compact group acts by unitary conjugation.
inline std::vector<std::pair<std::size_t, std::size_t>> compact_blocks(const RealFormData& form)
{
  if (form.block_sizes) {
    const auto p = static_cast<std::size_t>(form.block_sizes->first);
    const auto q = static_cast<std::size_t>(form.block_sizes->second);
    return {{0, p}, {p, q}};
  }
  if (form.diagram.series == Series::A) return {{0, form.ambient_dim}};
  throw input_error("no compact-group sampler for series " + std::string(1, series_letter(form.diagram.series)) +
                    " (only type A compact parts can be sampled)");
}

inline Vec block_of(const Vec& v, std::size_t off, std::size_t len)
{
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + len));
}

}  // namespace detail

/// SplitMix64 step; used to derive independent per-sample seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Haar-distributed unitary from the QR decomposition of a complex Ginibre
/// matrix with the phases of R's diagonal divided out.
template <typename Rng>
Eigen::MatrixXcd random_unitary(Rng& rng, int n)
{
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) z(i, j) = std::complex<double>(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

/// Descending eigenvalues of diag(a) + U diag(b) U*.
inline std::vector<double> hermitian_sum_spectrum(const std::vector<double>& a, const std::vector<double>& b,
                                                  const Eigen::MatrixXcd& u)
{
  const int n = static_cast<int>(a.size());
  Eigen::VectorXcd bv(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    m(k, k) = a[static_cast<std::size_t>(k)];
    bv(k) = b[static_cast<std::size_t>(k)];
  }
  m += u * bv.asDiagonal() * u.adjoint();
  m = (m + m.adjoint()).eval() * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) ev[static_cast<std::size_t>(k)] = es.eigenvalues()(n - 1 - k);
  return ev;
}

/// Numerical Π: sample U in each compact block (sample 0 is the identity),
/// take the support value of every subset-sum functional Σ_{k∈K} c_k over
/// the samples, and intersect with the trace equalities and the chamber.
/// The normals are exactly those of the Horn facets, so the result is an
/// inner approximation of the exact Π that tightens as samples grow.
inline CompactPolytope compact_polytope_sampled(const RealFormData& form, const Spectrum& a, const Spectrum& b,
                                                std::size_t samples, std::uint64_t seed)
{
  if (samples < 1) throw input_error("compact_polytope_sampled requires at least one sample");
  check_dimension(form, a);
  check_dimension(form, b);
  const auto blocks = detail::compact_blocks(form);
  HPolyhedron h = form.chamber_hrep();
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto [off, len] = blocks[bi];
    const Vec ab = detail::block_of(a.coords, off, len);
    const Vec bb = detail::block_of(b.coords, off, len);
    Rational total = 0;
    Vec trace = zeros(form.ambient_dim);
    for (std::size_t k = 0; k < len; ++k) {
      total += ab[k] + bb[k];
      trace[off + k] = 1;
    }
    h.add_eq(trace, total);
    if (len < 2) continue;
    const std::vector<double> ad = to_doubles(ab), bd = to_doubles(bb);
    const int n = static_cast<int>(len);
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t r = 1; r < len; ++r) {
      detail::for_each_subset(len, r, [&](const std::vector<std::size_t>& s) { subsets.push_back(s); });
    }
    std::vector<Rational> support(subsets.size());
    std::vector<bool> seen(subsets.size(), false);
    for (std::size_t s = 0; s < samples; ++s) {
      std::mt19937_64 rng(mix_seed(seed, (static_cast<std::uint64_t>(bi) << 40) + s));
      const Eigen::MatrixXcd u = s == 0 ? Eigen::MatrixXcd::Identity(n, n) : random_unitary(rng, n);
      Vec c = to_vec(hermitian_sum_spectrum(ad, bd, u));
      // Restore the exact trace so complementary subset bounds stay consistent.
      Rational drift = total;
      for (const auto& x : c) drift -= x;
      drift /= static_cast<long>(len);
      for (auto& x : c) x += drift;
      for (std::size_t k = 0; k < subsets.size(); ++k) {
        Rational v = 0;
        for (auto i : subsets[k]) v += c[i];
        if (!seen[k] || v > support[k]) {
          support[k] = v;
          seen[k] = true;
        }
      }
    }
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      Vec normal = zeros(form.ambient_dim);
      for (auto i : subsets[k]) normal[off + i] = 1;
      h.add_le(normal, support[k]);
    }
  }
  return CompactPolytope{canonicalize(h), false};
}

/// Exact Π for forms with a (p, q) block structure; otherwise the sampled
/// fallback with exact = false.
inline CompactPolytope compact_polytope(const RealFormData& form, const Spectrum& a, const Spectrum& b,
                                        std::size_t fallback_samples = 10000, std::uint64_t fallback_seed = 0)
{
  check_dimension(form, a);
  check_dimension(form, b);
  if (!form.block_sizes) return compact_polytope_sampled(form, a, b, fallback_samples, fallback_seed);
  for (const Spectrum* s : {&a, &b}) {
    if (!in_chamber(form, s->coords)) throw input_error("compact_polytope: input spectrum is not chamber-ordered");
  }
  HPolyhedron h = form.chamber_hrep();
  for (const auto& [off, len] : detail::compact_blocks(form)) {
    add_horn_block(h, off, detail::block_of(a.coords, off, len), detail::block_of(b.coords, off, len));
  }
  return CompactPolytope{canonicalize(h), true};
}

}  // namespace orbitsum

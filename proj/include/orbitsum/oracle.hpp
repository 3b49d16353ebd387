#pragma once

// Monte Carlo cross-check for su(p,q): conjugate diagonal admissible
// matrices by random elements of SU(p,q), add them, and test the spectrum
// of the sum against the exact polyhedron.

#include "orbitsum/orbitsum.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitsum {

using CMatrix = Eigen::MatrixXcd;

/// Raised when a sampled sum has a spectrum that is not real to tolerance.
class nonreal_spectrum_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a realized orbit point fails the pseudo-Hermitian residual check.
class conditioning_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kStructuralTol = 1e-8;
inline constexpr double kPseudoHermitianTol = 1e-10;
inline constexpr double kImagRelativeTol = 1e-6;

inline Eigen::VectorXd signature_diagonal(int p, int q)
{
  Eigen::VectorXd j(p + q);
  j.head(p).setOnes();
  j.tail(q).setConstant(-1.0);
  return j;
}

/// A = J A* J⁻¹ up to rounding: the dual of su(p,q) realized as matrices.
struct PseudoHermitianMatrix {
  CMatrix entries;
  int p = 0;
  int q = 0;

  /// max |AJ - JA*|.
  double absolute_residual() const
  {
    const Eigen::VectorXd j = signature_diagonal(p, q);
    return (entries * j.asDiagonal() - j.asDiagonal() * entries.adjoint()).cwiseAbs().maxCoeff();
  }

  /// absolute_residual relative to max(1, max |A|).
  double residual() const { return absolute_residual() / std::max(1.0, entries.cwiseAbs().maxCoeff()); }
};

/// g = k₁·exp(P)·k₂ with k₁, k₂ Haar-distributed in S(U(p)×U(q)) and
/// P = [[0, B], [B*, 0]], B complex Gaussian of standard deviation `scale`.
/// The compact factors cover K fully at every scale; `scale` only sets the
/// size of the boost. Scale 0 returns the identity.
inline CMatrix sample_group_element(int p, int q, std::uint64_t seed, double scale)
{
  if (p < 1 || q < 1) throw input_error("sample_group_element requires p, q ≥ 1");
  if (!(scale >= 0.0)) throw input_error("sample_group_element requires scale ≥ 0");
  const int n = p + q;
  if (scale == 0.0) return CMatrix::Identity(n, n);
  std::mt19937_64 rng(seed);
  auto compact = [&]() {
    CMatrix k = CMatrix::Zero(n, n);
    k.topLeftCorner(p, p) = random_unitary(rng, p);
    k.bottomRightCorner(q, q) = random_unitary(rng, q);
    const std::complex<double> det = k.determinant();
    return CMatrix(k * std::pow(det, -1.0 / n));
  };
  const CMatrix k1 = compact();
  const CMatrix k2 = compact();
  std::normal_distribution<double> normal(0.0, scale);
  CMatrix b(p, q);
  for (int j = 0; j < q; ++j) {
    for (int i = 0; i < p; ++i) b(i, j) = std::complex<double>(normal(rng), normal(rng));
  }
  CMatrix x = CMatrix::Zero(n, n);
  x.topRightCorner(p, q) = b;
  x.bottomLeftCorner(q, p) = b.adjoint();
  return k1 * x.exp() * k2;
}

/// max |g* J g - J|.
inline double pseudo_unitary_residual(const CMatrix& g, int p, int q)
{
  const Eigen::VectorXd j = signature_diagonal(p, q);
  const CMatrix jm = j.asDiagonal();
  return (g.adjoint() * jm * g - jm).cwiseAbs().maxCoeff();
}

/// A = g·diag(x)·g⁻¹, with g⁻¹ = J g* J for pseudo-unitary g.
inline PseudoHermitianMatrix realize_orbit_point(const RealFormData& form, const Spectrum& x, const CMatrix& g)
{
  if (!form.block_sizes) throw input_error("realize_orbit_point requires an su(p,q) form");
  check_dimension(form, x);
  const auto [p, q] = *form.block_sizes;
  const Eigen::VectorXd j = signature_diagonal(p, q);
  Eigen::VectorXcd d(p + q);
  for (int k = 0; k < p + q; ++k) d(k) = x.coords[static_cast<std::size_t>(k)].get_d();
  const CMatrix g_inv = j.asDiagonal() * g.adjoint() * j.asDiagonal();
  PseudoHermitianMatrix a{g * d.asDiagonal() * g_inv, p, q};
  // Residual measured against the size of the factors, not of the product.
  const double factor = std::max(1.0, g.cwiseAbs2().sum() * d.cwiseAbs().maxCoeff());
  const double res = a.absolute_residual() / factor;
  if (res > kPseudoHermitianTol) {
    throw conditioning_error("pseudo-Hermitian residual " + std::to_string(res) + " exceeds tolerance");
  }
  return a;
}

struct FloatSpectrum {
  std::vector<double> coords;  // λ-block descending, then μ-block descending
  double imag_residual = 0.0;  // max |Im| / spectral radius
  double gap = 0.0;            // λ_p - μ_1
};

/// Eigenvalues of A + B from a general complex eigensolver.
inline FloatSpectrum spectrum_of_sum(const PseudoHermitianMatrix& a, const PseudoHermitianMatrix& b)
{
  if (a.p != b.p || a.q != b.q) throw input_error("spectrum_of_sum: signature mismatch");
  const CMatrix s = a.entries + b.entries;
  Eigen::ComplexEigenSolver<CMatrix> es(s, false);
  if (es.info() != Eigen::Success) throw nonreal_spectrum_error("eigensolver did not converge");
  const Eigen::VectorXcd ev = es.eigenvalues();
  double radius = 0.0, imag = 0.0;
  std::vector<double> re;
  for (int k = 0; k < ev.size(); ++k) {
    radius = std::max(radius, std::abs(ev(k)));
    imag = std::max(imag, std::abs(ev(k).imag()));
    re.push_back(ev(k).real());
  }
  FloatSpectrum out;
  out.imag_residual = radius > 0 ? imag / radius : imag;
  if (out.imag_residual > kImagRelativeTol) {
    throw nonreal_spectrum_error("sum has non-real spectrum: relative imaginary part " + std::to_string(out.imag_residual));
  }
  std::sort(re.begin(), re.end(), std::greater<>());
  out.coords = re;
  out.gap = re[static_cast<std::size_t>(a.p - 1)] - re[static_cast<std::size_t>(a.p)];
  return out;
}

struct SampleReport {
  std::size_t total = 0;
  std::size_t inside = 0;
  double worst_violation = 0.0;
  std::uint64_t worst_sample_seed = 0;
  double imag_residual_max = 0.0;
  double gap_min = std::numeric_limits<double>::infinity();
  std::uint64_t master_seed = 0;
  double tol = 0.0;
  std::vector<double> scales;

  friend bool operator==(const SampleReport&, const SampleReport&) = default;
};

struct SamplingOptions {
  std::vector<double> scales{0.25, 0.5, 1.0};
};

/// One sampled spectrum of A + B; sample i uses sub-seed mix_seed(seed, i)
/// and scale scales[i mod |scales|].
inline FloatSpectrum sample_sum_spectrum(const RealFormData& form, const Spectrum& a, const Spectrum& b,
                                         std::uint64_t sub_seed, double scale)
{
  const auto [p, q] = *form.block_sizes;
  const CMatrix g = sample_group_element(p, q, mix_seed(sub_seed, 0), scale);
  const CMatrix h = sample_group_element(p, q, mix_seed(sub_seed, 1), scale);
  return spectrum_of_sum(realize_orbit_point(form, a, g), realize_orbit_point(form, b, h));
}

/// Samples spectra of A + B and tests membership in `target` at tolerance.
inline SampleReport verify_containment(const RealFormData& form, const Spectrum& a, const Spectrum& b,
                                       const HPolyhedron& target, std::size_t samples, std::uint64_t seed, double tol,
                                       const SamplingOptions& opts = {})
{
  if (!form.block_sizes) throw input_error("verify_containment requires an su(p,q) form");
  if (opts.scales.empty()) throw input_error("verify_containment requires at least one scale");
  if (target.dim != form.ambient_dim) throw input_error("verify_containment: polyhedron dimension mismatch");
  SampleReport rep;
  rep.master_seed = seed;
  rep.tol = tol;
  rep.scales = opts.scales;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::uint64_t sub = mix_seed(seed, i);
    const FloatSpectrum s = sample_sum_spectrum(form, a, b, sub, opts.scales[i % opts.scales.size()]);
    const Membership m = contains(target, s.coords, tol);
    ++rep.total;
    if (m.inside) ++rep.inside;
    if (i == 0 || m.worst_violation > rep.worst_violation) {
      rep.worst_violation = m.worst_violation;
      rep.worst_sample_seed = sub;
    }
    rep.imag_residual_max = std::max(rep.imag_residual_max, s.imag_residual);
    rep.gap_min = std::min(rep.gap_min, s.gap);
  }
  return rep;
}

inline SampleReport verify_containment(const OrbitSumResult& r, std::size_t samples, std::uint64_t seed, double tol,
                                       const SamplingOptions& opts = {})
{
  return verify_containment(r.form, r.lambda_a, r.lambda_b, r.s_ab, samples, seed, tol, opts);
}

/// Diagonal of g·diag(x)·g⁻¹ (real for pseudo-Hermitian matrices) tested
/// against the torus image Conv(W_k·x) + Cone(Δ⁺_nc). gap_min is unused.
inline SampleReport verify_orbit_image(const RealFormData& form, const Spectrum& x, std::size_t samples, std::uint64_t seed,
                                       double tol, const SamplingOptions& opts = {})
{
  if (!form.block_sizes) throw input_error("verify_orbit_image requires an su(p,q) form");
  if (opts.scales.empty()) throw input_error("verify_orbit_image requires at least one scale");
  const HPolyhedron image = orbit_image(form, x);
  const auto [p, q] = *form.block_sizes;
  SampleReport rep;
  rep.master_seed = seed;
  rep.tol = tol;
  rep.scales = opts.scales;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::uint64_t sub = mix_seed(seed, i);
    const CMatrix g = sample_group_element(p, q, sub, opts.scales[i % opts.scales.size()]);
    const PseudoHermitianMatrix a = realize_orbit_point(form, x, g);
    std::vector<double> d(static_cast<std::size_t>(p + q));
    double imag = 0.0;
    for (int k = 0; k < p + q; ++k) {
      d[static_cast<std::size_t>(k)] = a.entries(k, k).real();
      imag = std::max(imag, std::abs(a.entries(k, k).imag()));
    }
    const Membership m = contains(image, d, tol);
    ++rep.total;
    if (m.inside) ++rep.inside;
    if (i == 0 || m.worst_violation > rep.worst_violation) {
      rep.worst_violation = m.worst_violation;
      rep.worst_sample_seed = sub;
    }
    rep.imag_residual_max = std::max(rep.imag_residual_max, imag);
  }
  return rep;
}

}  // namespace orbitsum

#include "test_support.hpp"

#include <orbitsum/oracle.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace orbitsum;
using namespace orbitsum::testing;

namespace {

const Spectrum kA1{to_vec({4, 1, -5})};
const Spectrum kB1{to_vec({2, 1, -3})};

CMatrix boost(double t)
{
  CMatrix g(2, 2);
  g << std::cosh(t), std::sinh(t), std::sinh(t), std::cosh(t);
  return g;
}

}  // namespace

TEST(GroupSampling, ScaleZeroIsIdentity)
{
  EXPECT_TRUE(sample_group_element(2, 1, 7, 0.0).isApprox(CMatrix::Identity(3, 3)));
  EXPECT_THROW(sample_group_element(0, 2, 7, 1.0), input_error);
  EXPECT_THROW(sample_group_element(2, 2, 7, -1.0), input_error);
}

TEST(GroupSampling, PseudoUnitaryWithUnitDeterminant)
{
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
    for (double scale : {0.25, 0.5, 1.0}) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const CMatrix g = sample_group_element(p, q, seed, scale);
        EXPECT_LT(pseudo_unitary_residual(g, p, q), 1e-8) << p << "," << q << " scale " << scale;
        EXPECT_NEAR(std::abs(g.determinant() - std::complex<double>(1.0)), 0.0, 1e-8);
      }
    }
  }
}

TEST(GroupSampling, DeterministicPerSeed)
{
  EXPECT_EQ(sample_group_element(2, 2, 11, 0.5), sample_group_element(2, 2, 11, 0.5));
  EXPECT_NE(sample_group_element(2, 2, 11, 0.5), sample_group_element(2, 2, 12, 0.5));
}

TEST(RealizeOrbitPoint, IdentityGivesDiagonal)
{
  const PseudoHermitianMatrix a = realize_orbit_point(su(2, 1), kA1, CMatrix::Identity(3, 3));
  CMatrix expected = CMatrix::Zero(3, 3);
  expected(0, 0) = 4;
  expected(1, 1) = 1;
  expected(2, 2) = -5;
  EXPECT_TRUE(a.entries.isApprox(expected));
  EXPECT_LT(a.residual(), 1e-14);
}

TEST(RealizeOrbitPoint, Su11BoostKeepsEigenvalues)
{
  for (double t : {0.1, 0.7, 1.5}) {
    const PseudoHermitianMatrix a = realize_orbit_point(su(1, 1), Spectrum{to_vec({3, -3})}, boost(t));
    EXPECT_LT(pseudo_unitary_residual(boost(t), 1, 1), 1e-12);
    Eigen::ComplexEigenSolver<CMatrix> es(a.entries);
    std::vector<double> ev{es.eigenvalues()(0).real(), es.eigenvalues()(1).real()};
    std::sort(ev.begin(), ev.end());
    EXPECT_NEAR(ev[0], -3.0, 1e-8);
    EXPECT_NEAR(ev[1], 3.0, 1e-8);
    EXPECT_NEAR(std::abs(a.entries.trace()), 0.0, 1e-10);
    EXPECT_LT(a.residual(), 1e-10);
  }
}

TEST(RealizeOrbitPoint, RejectsNonBlockForms)
{
  const RealFormData su3 = build_real_form(VoganDiagram{Series::A, 2, std::nullopt});
  EXPECT_THROW(realize_orbit_point(su3, Spectrum{to_vec({1, 0, -1})}, CMatrix::Identity(3, 3)), input_error);
}

TEST(SpectrumOfSum, DiagonalCase)
{
  const RealFormData f = su(2, 1);
  const auto id = CMatrix::Identity(3, 3);
  const FloatSpectrum s = spectrum_of_sum(realize_orbit_point(f, kA1, id), realize_orbit_point(f, kB1, id));
  ASSERT_EQ(s.coords.size(), 3u);
  EXPECT_NEAR(s.coords[0], 6, 1e-12);
  EXPECT_NEAR(s.coords[1], 2, 1e-12);
  EXPECT_NEAR(s.coords[2], -8, 1e-12);
  EXPECT_NEAR(s.gap, 10, 1e-12);
  EXPECT_LT(s.imag_residual, 1e-12);
}

TEST(SpectrumOfSum, Su11ReversedTriangleInequality)
{
  const RealFormData f = su(1, 1);
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const FloatSpectrum s = sample_sum_spectrum(f, Spectrum{to_vec({2, -2})}, Spectrum{to_vec({1, -1})}, seed, 1.0);
    EXPECT_GE(s.coords[0], 3.0 - 1e-6);
    EXPECT_NEAR(s.coords[0] + s.coords[1], 0.0, 1e-9);
  }
}

TEST(SpectrumOfSum, SumIsPseudoHermitian)
{
  const RealFormData f = su(2, 2);
  const Spectrum a{to_vec({4, 2, 1, -7})}, b{to_vec({3, 2, 1, -6})};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto pa = realize_orbit_point(f, a, sample_group_element(2, 2, seed, 0.5));
    const auto pb = realize_orbit_point(f, b, sample_group_element(2, 2, seed + 1000, 0.5));
    const PseudoHermitianMatrix sum{pa.entries + pb.entries, 2, 2};
    EXPECT_LT(sum.residual(), 1e-9);
  }
}

TEST(VerifyContainment, ExampleOneAllInside)
{
  const OrbitSumResult r = sum_spectra(su(2, 1), kA1, kB1);
  const SampleReport rep = verify_containment(r, 10000, 1, 1e-6);
  EXPECT_EQ(rep.total, 10000u);
  EXPECT_EQ(rep.inside, rep.total) << "worst " << rep.worst_violation;
  EXPECT_LT(rep.imag_residual_max, 1e-6);
  EXPECT_GT(rep.gap_min, 0.0);
  EXPECT_EQ(rep.scales, (std::vector<double>{0.25, 0.5, 1.0}));
}

TEST(VerifyContainment, ExampleTwoBlockGapStaysPositive)
{
  const OrbitSumResult r = sum_spectra(su(2, 2), Spectrum{to_vec({4, 2, 1, -7})}, Spectrum{to_vec({3, 2, 1, -6})});
  const SampleReport rep = verify_containment(r, 10000, 5, 1e-6);
  EXPECT_EQ(rep.inside, rep.total);
  EXPECT_GT(rep.gap_min, 0.0);
  EXPECT_LT(rep.imag_residual_max, 1e-6);
}

TEST(VerifyContainment, ScaleZeroHitsTheDiagonalSum)
{
  const OrbitSumResult r = sum_spectra(su(2, 1), kA1, kB1);
  SamplingOptions opts;
  opts.scales = {0.0};
  const SampleReport rep = verify_containment(r, 20, 3, 0.0, opts);
  EXPECT_EQ(rep.inside, 20u);
  EXPECT_EQ(rep.worst_violation, 0.0);
}

TEST(VerifyContainment, TightenedPolyhedronIsCaught)
{
  OrbitSumResult r = sum_spectra(su(2, 1), kA1, kB1);
  HPolyhedron tight = r.s_ab;
  tight.add_ge(to_vec({2, 0, 0}), 11);  // λ₁ ≥ 11/2
  const SampleReport rep = verify_containment(r.form, kA1, kB1, tight, 2000, 9, 1e-6);
  EXPECT_LT(rep.inside, rep.total);
  EXPECT_GT(rep.worst_violation, 0.1);
}

TEST(VerifyContainment, Deterministic)
{
  const OrbitSumResult r = sum_spectra(su(2, 1), kA1, kB1);
  EXPECT_EQ(verify_containment(r, 300, 42, 1e-6), verify_containment(r, 300, 42, 1e-6));
  EXPECT_NE(verify_containment(r, 300, 42, 1e-6).worst_sample_seed, verify_containment(r, 300, 43, 1e-6).worst_sample_seed);
}

TEST(VerifyContainment, RejectsBadArguments)
{
  const OrbitSumResult r = sum_spectra(su(2, 1), kA1, kB1);
  SamplingOptions none;
  none.scales.clear();
  EXPECT_THROW(verify_containment(r, 10, 0, 1e-6, none), input_error);
  EXPECT_THROW(verify_containment(r.form, kA1, kB1, HPolyhedron::universe(2), 10, 0, 1e-6), input_error);
}

TEST(VerifyOrbitImage, Su21DiagonalProjectionsInsideImage)
{
  const SampleReport rep = verify_orbit_image(su(2, 1), kA1, 10000, 2, 1e-6);
  EXPECT_EQ(rep.inside, rep.total) << "worst " << rep.worst_violation;
  EXPECT_LT(rep.imag_residual_max, 1e-9);
}

TEST(VerifyOrbitImage, ChamberCutWouldBeViolated)
{
  // Sampled diagonals reach the reflected side; the chamber-cut image misses them.
  const RealFormData f = su(2, 1);
  const HPolyhedron cut = intersect(orbit_image(f, kA1), f.chamber_hrep());
  int below = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const auto a = realize_orbit_point(f, kA1, sample_group_element(2, 1, mix_seed(4, i), 1.0));
    std::vector<double> d{a.entries(0, 0).real(), a.entries(1, 1).real(), a.entries(2, 2).real()};
    below += !contains(cut, d, 1e-6).inside;
  }
  EXPECT_GT(below, 0);
}

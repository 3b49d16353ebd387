#include "properties.hpp"

#include <gtest/gtest.h>

using namespace orbitsum::testing;

TEST(PolyhedraProperties, VertexRayRoundTrip)
{
  std::string why;
  EXPECT_EQ(check_round_trip(200, 11, why), 0u) << why;
}

TEST(PolyhedraProperties, ConvExtPlusRecessionDecomposition)
{
  std::string why;
  EXPECT_EQ(check_decomposition(200, 12, why), 0u) << why;
}

TEST(PolyhedraProperties, FourierMotzkinSoundness)
{
  std::string why;
  EXPECT_EQ(check_fm_soundness(200, 100, 13, why), 0u) << why;
}

TEST(PolyhedraProperties, CanonicalFormIdempotentAndOrderIndependent)
{
  std::string why;
  EXPECT_EQ(check_canonical_idempotence(200, 14, why), 0u) << why;
}

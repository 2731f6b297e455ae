#include <gtest/gtest.h>

#include <set>

#include "mzinfo/rng.hpp"

namespace mzinfo::rng {
namespace {

// Known-answer vectors from the Random123 distribution (kat_vectors).
TEST(Philox, KnownAnswerZero) {
  const Counter out = philox4x32_10({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out, (Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
}

TEST(Philox, KnownAnswerAllOnes) {
  const Counter out = philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                    {0xffffffffu, 0xffffffffu});
  EXPECT_EQ(out, (Counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
}

TEST(Philox, KnownAnswerPiDigits) {
  const Counter out = philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                                    {0xa4093822u, 0x299f31d0u});
  EXPECT_EQ(out, (Counter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(Uniform, RangeAndDeterminism) {
  double sum = 0.0;
  for (std::uint64_t i = 0; i < 100'000; ++i) {
    const double u = uniform(7, Stream::Click, i);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_EQ(u, uniform(7, Stream::Click, i));
    sum += u;
  }
  EXPECT_NEAR(sum / 100'000, 0.5, 0.005);
}

TEST(Uniform, StreamsAndSeedsDiffer) {
  EXPECT_NE(uniform(7, Stream::Click, 0), uniform(7, Stream::Choice, 0));
  EXPECT_NE(uniform(7, Stream::Click, 0), uniform(8, Stream::Click, 0));
  EXPECT_NE(uniform(7, Stream::Click, 0), uniform(7, Stream::Click, 1ull << 32));
}

TEST(DeriveSeed, DistinctSalts) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(derive_seed(1, s));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(derive_seed(5, 3), derive_seed(5, 3));
}

}  // namespace
}  // namespace mzinfo::rng

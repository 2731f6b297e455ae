#pragma once

#include <array>
#include <cstdint>

// Counter-based random numbers. A deviate is a pure function of
// (seed, stream, index), so any partitioning of trials across workers
// reproduces the same stream bit for bit.
namespace mzinfo::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds (Salmon et al., SC'11; Random123 constants).
Counter philox4x32_10(Counter counter, Key key) noexcept;

/// Streams used by the trial engine. Each consumer gets its own stream so
/// that adding a consumer never shifts another one's deviates.
enum class Stream : std::uint32_t {
  Click = 0,
  Choice = 1,
};

/// Uniform deviate in [0, 1) with 53 random bits.
///
/// Counter = (index lo, index hi, stream, 0), key = (seed lo, seed hi); the
/// first two output words form the mantissa.
double uniform(std::uint64_t seed, Stream stream, std::uint64_t index) noexcept;

/// SplitMix64 finalizer applied to seed + (salt + 1) * golden gamma. Used to
/// derive independent seeds for sub-runs (scan points, choice policies).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) noexcept;

}  // namespace mzinfo::rng

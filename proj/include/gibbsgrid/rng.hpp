#pragma once

#include <cstdint>
#include <random>

namespace gibbsgrid {

/// Seedable random source with a fixed, platform-independent output stream.
///
/// Backed by std::mt19937_64, whose output sequence is pinned by the C++
/// standard. The standard distributions are not, so bounded integers and
/// unit reals are derived here:
///   - below(n): rejection sampling on the top of the 64-bit range, then
///     value % n. Unbiased.
///   - uniform01(): top 53 bits scaled by 2^-53, in [0, 1).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

} // namespace gibbsgrid

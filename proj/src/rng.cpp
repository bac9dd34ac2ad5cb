#include "gibbsgrid/rng.hpp"

#include <limits>
#include <stdexcept>

namespace gibbsgrid {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: empty range");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // Largest multiple of n that fits; draws at or above it are rejected.
  const std::uint64_t limit = kMax - (kMax % n + 1) % n;
  std::uint64_t x = engine_();
  while (x > limit) x = engine_();
  return x % n;
}

} // namespace gibbsgrid

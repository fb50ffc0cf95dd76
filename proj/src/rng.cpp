#include "oscchain/rng.hpp"

#include <cmath>
#include <numbers>

namespace oscchain {

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix(mix(seed) ^ mix(stream * 0xD2B74407B1CE6E93ULL + 1))) {}

std::uint64_t CounterRng::next_u64() { return mix(key_ + 0xA0761D6478BD642FULL * ++counter_); }

double CounterRng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted away from 0 so the log is finite.
  double u1 = next_unit();
  double u2 = next_unit();
  u1 += 0x1.0p-54;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

}  // namespace oscchain

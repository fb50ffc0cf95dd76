#pragma once

#include <cstdint>

namespace oscchain {

// Counter-based generator: the state is (key, counter) and every output is a
// pure function of both, so identical (seed, stream) pairs reproduce identical
// sequences bit-for-bit across runs. Stream r is the sub-stream used by
// replica r.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double next_unit();      // uniform on [0, 1), 53 random bits
  double next_gaussian();  // standard normal, Box-Muller

  static std::uint64_t mix(std::uint64_t z);  // splitmix64 finalizer

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace oscchain

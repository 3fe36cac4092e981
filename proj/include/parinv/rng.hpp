#pragma once

// Counter-based generator: output k of key K is splitmix64(K + (k+1)·γ) with
// γ = 0x9e3779b97f4a7c15. Bounded draws use rejection on the top of the 64-bit
// range, so every platform produces the same stream.

#include <cstdint>

namespace parinv {

struct Seed {
  std::uint64_t value = 0;
  std::uint64_t stream = 0;
};

std::uint64_t splitmix64_mix(std::uint64_t z);

class CounterRng {
 public:
  explicit CounterRng(Seed seed);

  std::uint64_t next();
  /// Uniform in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Independent generator for a sub-stream (e.g. one trial).
  CounterRng fork(std::uint64_t stream) const;

  std::uint64_t counter() const { return counter_; }

 private:
  CounterRng(std::uint64_t key, int) : key_(key) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace parinv

#pragma once

#include <cstdint>
#include <random>

namespace locnorm::detail {

// Engine output is specified by the standard; distributions are not, so the
// draws are done by hand to keep seeded data identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next() { return g_(); }

  // Uniform integer in [lo, hi].
  long long uniform_int(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = g_();
    while (x >= limit);
    return lo + static_cast<long long>(x % span);
  }

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(g_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  bool coin() { return (g_() >> 63) != 0; }

  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

}  // namespace locnorm::detail

#pragma once

#include <cmath>
#include <cstdint>

#include "epf/types.hpp"

namespace epf {

/// Counter-based generator (SplitMix64 over an incrementing counter) with
/// explicit stream splitting, so every component of an experiment draws from
/// its own reproducible stream of one seed. Identical (seed, stream) yields
/// identical draws on any platform.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(finalize(finalize(seed) + 0x9E3779B97F4A7C15ULL * (stream + 1))) {}

  std::uint64_t next_u64() { return finalize(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

  /// Uniform in the open interval (0,1).
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; draws come in pairs, the spare is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

  Vec normal_vec(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

 private:
  static std::uint64_t finalize(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace epf

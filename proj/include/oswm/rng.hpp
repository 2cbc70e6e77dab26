#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace oswm {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seeded random stream with pinned distribution algorithms. std::*_distribution
// is implementation-defined, so uniform/normal are spelled out here to keep
// sampled values stable across standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed)
      : seed_(seed), engine_(splitmix64(seed ^ 0x6F5902AC66F88217ULL)) {}

  std::uint64_t next_u64() { return engine_(); }

  // [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; generates pairs and caches the second value.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // [0, n)
  int uniform_int(int n) {
    int v = static_cast<int>(uniform() * static_cast<double>(n));
    return v >= n ? n - 1 : v;
  }

  // [lo, hi] inclusive
  int uniform_int(int lo, int hi) { return lo + uniform_int(hi - lo + 1); }

  bool bernoulli(double p) { return uniform() < p; }

  // Independent child stream; deterministic in (this stream's seed, id).
  // Spawning does not consume state from the parent.
  RngStream spawn(std::uint64_t id) const {
    return RngStream(splitmix64(seed_ ^ splitmix64(id + 0x51ED2701FB2D7BF1ULL)));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace oswm

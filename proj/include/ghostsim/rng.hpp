#pragma once

#include <cstdint>
#include <random>

namespace ghostsim {

/// SplitMix64 step; used only to whiten seeds for stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = master;
  std::uint64_t h = splitmix64(s);
  s ^= a * 0xD1342543DE82EF95ULL;
  h ^= splitmix64(s);
  s ^= b * 0xAF251AF3B0F025B5ULL;
  h ^= splitmix64(s);
  return h;
}

/// A self-contained random stream. Every stochastic operation takes one of
/// these explicitly; workers never share a stream. Frame streams are derived
/// from (master_seed, frame_index) so results do not depend on scheduling.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  static RngStream for_frame(std::uint64_t master_seed, std::uint64_t frame_index) {
    return RngStream(derive_seed(master_seed, frame_index + 1, 0x66726d65ULL));
  }

  /// Uniform in [0, 1).
  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double normal() { return normal_(engine_); }
  double normal(double mean, double sigma) { return mean + sigma * normal_(engine_); }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform() < p;
  }

  long long poisson(double mean) {
    if (mean <= 0.0) return 0;
    return std::poisson_distribution<long long>(mean)(engine_);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace ghostsim

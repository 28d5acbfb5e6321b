#pragma once

#include <cstdint>
#include <random>

namespace dcpso {

// splitmix64; used to decorrelate derived seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derive the seed for an independent stream of a run. The landscape and the
// algorithm each get their own stream so algorithm choices never perturb the
// landscape dynamics.
inline std::uint64_t derive_stream_seed(std::uint64_t run_seed, std::uint64_t stream) {
  return mix_seed(run_seed ^ mix_seed(stream + 1));
}

// Seedable random source owned by exactly one run (or one landscape).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return unit_(engine_); }

  // Uniform in [low, high].
  double uniform(double low, double high) {
    return low + (high - low) * unit_(engine_);
  }

  // Standard normal, mean 0, variance 1.
  double normal() { return normal_(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace dcpso

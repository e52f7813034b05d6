#pragma once

#include <cstdint>
#include <random>

namespace coxsys {

// Thin wrapper over mt19937_64 with a portable uint64 -> double mapping, so
// sampled test corpora are bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi] (small ranges only; modulo bias negligible).
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

// Seed for sampling harnesses: COXSYS_SEED environment variable, default 0.
std::uint64_t env_seed();

}  // namespace coxsys

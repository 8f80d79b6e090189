#pragma once

#include <cstdint>
#include <random>

namespace geogen::dataset {

// Deterministic random source. The mapping from raw engine output to doubles
// and bounded ints is hand-rolled so that streams are identical across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform();

  // Uniform in [lo, hi).
  double uniform(double lo, double hi);

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // True with probability p.
  bool chance(double p) { return uniform() < p; }

  std::uint64_t next_raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace geogen::dataset

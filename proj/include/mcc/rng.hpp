#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mcc {

uint64_t splitmix64(uint64_t x);

// Deterministic random source. The samplers are coded out explicitly
// (instead of std::*_distribution) so that a given seed produces the
// same stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; the second variate of each pair is kept as a spare.
  double normal(double mean = 0.0, double stddev = 1.0);

  // Uniform index in [0, n), rejection sampled to avoid modulo bias.
  size_t index(size_t n);

  // Independent stream derived from (seed, stream id).
  Rng substream(uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ (0x9E3779B97F4A7C15ULL * (stream + 1))));
  }

  // Fisher-Yates.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[index(i)]);
    }
  }

 private:
  uint64_t seed_;
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace mcc

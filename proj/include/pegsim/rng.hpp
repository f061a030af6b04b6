#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace pegsim {

// Deterministic random stream. One instance drives a whole episode; every
// stochastic choice draws from it in a fixed order (see run_episode), so a
// seed fully determines an episode.
//
// Variates are derived from the raw 64-bit outputs directly rather than
// through std::*_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform double in [lo, hi]. Degenerate lo == hi returns lo.
  double uniform(double lo, double hi) {
    const double u = (gen_() >> 11) * 0x1.0p-53;  // [0, 1)
    return lo + (hi - lo) * u;
  }

  // Uniform integer in the inclusive range [lo, hi], bias-free.
  int uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    const std::uint64_t excess = (UINT64_MAX % span + 1) % span;  // 2^64 mod span
    std::uint64_t x = gen_();
    if (excess != 0) {
      const std::uint64_t bound = 0 - excess;  // 2^64 - excess
      while (x >= bound) x = gen_();
    }
    return static_cast<int>(lo + static_cast<std::int64_t>(x % span));
  }

  // Samples an index from an explicit probability list. Entries with
  // probability exactly 0 are never returned.
  std::size_t categorical(std::span<const double> probs) {
    double total = 0.0;
    for (double p : probs) {
      if (p < 0.0) throw std::invalid_argument("categorical: negative probability");
      total += p;
    }
    if (!(total > 0.0)) throw std::invalid_argument("categorical: probabilities sum to zero");
    const double u = uniform(0.0, total);
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
      if (probs[k] <= 0.0) continue;
      acc += probs[k];
      last_positive = k;
      if (u < acc) return k;
    }
    return last_positive;  // u landed on the top edge
  }

 private:
  std::mt19937_64 gen_;
};

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace pegsim

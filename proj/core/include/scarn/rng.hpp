#ifndef SCARN_RNG_HPP_
#define SCARN_RNG_HPP_

#include <cstdint>

namespace scarn {

// Seedable deterministic generator: xoshiro256++ (Blackman & Vigna), with
// the 256-bit state expanded from the 64-bit seed via splitmix64. The same
// seed produces the same stream on every platform; nothing here depends on
// libc or libstdc++ distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) { reseed(seed); }

  void reseed(uint64_t seed);
  uint64_t seed() const { return seed_; }

  uint64_t next_u64();

  // Uniform double in [0, 1), 53 random bits.
  double uniform();
  // Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  // Unbiased uniform integer in [0, bound); bound must be positive.
  uint64_t uniform_int(uint64_t bound);
  // Bernoulli draw with success probability p.
  bool bernoulli(double p) { return uniform() < p; }
  // Standard normal via Box-Muller (two uniform draws per call).
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Derive an independent child seed from this generator's seed and a tag;
  // pure function of (seed, tag), does not consume stream state.
  uint64_t child_seed(uint64_t tag) const;

 private:
  uint64_t state_[4];
  uint64_t seed_ = 0;
};

}  // namespace scarn

#endif  // SCARN_RNG_HPP_

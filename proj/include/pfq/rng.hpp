#pragma once

#include <cstdint>

#include "pfq/rational.hpp"

namespace pfq {

// Deterministic PRNG (splitmix64). Not std::mt19937 + distributions on
// purpose: distribution output is implementation-defined, and byte-identical
// runs across toolchains are part of the output contract.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive. Rejection sampling, unbiased.
  int uniform_int(int lo, int hi);

  bool chance(int numerator, int denominator) {
    return uniform_int(1, denominator) <= numerator;
  }

  // Uniform integer entry in [-bound, bound].
  Rational entry(int bound) { return rat(uniform_int(-bound, bound)); }

  // Nonzero integer entry in [-bound, bound] \ {0}.
  Rational nonzero_entry(int bound);

  // Nonnegative rational p/q with p in [0, bound], q in [1, max_den].
  Rational nonneg_rational(int bound, int max_den);

 private:
  std::uint64_t state_;
};

// Per-trial seed derivation: one shared root seed, one counter.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t counter);

}  // namespace pfq

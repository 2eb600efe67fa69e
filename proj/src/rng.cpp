#include "pfq/rng.hpp"

#include <stdexcept>

namespace pfq {

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  std::uint64_t limit = (~0ULL / span) * span;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Rational Rng::nonzero_entry(int bound) {
  int v = uniform_int(1, bound);
  return rat(chance(1, 2) ? v : -v);
}

Rational Rng::nonneg_rational(int bound, int max_den) {
  return rat(uniform_int(0, bound), uniform_int(1, max_den));
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t counter) {
  // One splitmix step over a mixed word keeps per-trial streams disjoint.
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace pfq

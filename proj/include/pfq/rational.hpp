#pragma once

#include <gmpxx.h>

#include <string>

namespace pfq {

// Exact arbitrary-precision rational scalar. GMP keeps values in lowest
// terms with a positive denominator, which is exactly the invariant the
// rest of the library relies on: every comparison against zero is exact.
using Rational = mpq_class;

// Parses "p/q" or a plain integer (optional sign). Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Renders as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace pfq

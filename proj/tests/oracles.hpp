// Test-only reference implementations, deliberately independent of the
// production code paths they check.
#pragma once

#include <stdexcept>

#include "pfq/matrix.hpp"

namespace pfq::testing {

// Cofactor expansion along the first row; exponential, keep n <= 6.
inline Rational det_cofactor(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("square only");
  const int n = m.rows();
  if (n > 6) throw std::invalid_argument("cofactor oracle capped at n = 6");
  if (n == 0) return rat(1);
  if (n == 1) return m.at(1, 1);
  Rational total = 0;
  for (int j = 1; j <= n; ++j) {
    Rational term = m.at(1, j) * det_cofactor(remove_row_col(m, 1, j));
    total += (j % 2 == 1) ? term : -term;
  }
  return total;
}

}  // namespace pfq::testing

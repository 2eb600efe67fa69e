#pragma once

#include <utility>
#include <vector>

#include "pfq/matrix.hpp"

namespace pfq {

// A word is a finite sequence of indices; repeats are allowed and force
// sign zero.
using Word = std::vector<int>;

// Sign of the permutation spelled by `word` over [n]: +1/-1 when the word is
// a permutation of 1..n, 0 when any letter repeats. Letters outside [n]
// throw.
int perm_sign(const Word& word, int n);

// Knuth-style word sign s(alpha, beta): 0 if alpha or beta repeats a letter
// or beta has a letter outside alpha; otherwise the sign of the permutation
// taking alpha to beta followed by alpha-with-beta-removed.
int s_sign(const Word& alpha, const Word& beta);

// All partitions of [n] into unordered pairs ((n-1)!! of them). n <= 12.
std::vector<std::vector<std::pair<int, int>>> perfect_pairings(int n);

// Pfaffian straight from the signed sum over pair partitions. The
// combinatorial oracle: O((n-1)!!), capped at order 12. Odd order gives 0,
// order 0 gives 1.
Rational pf_definition(const SkewMatrix& a);

// Pfaffian by skew-symmetric elimination, O(n^3) scalar operations.
// Pivots the leftmost nonzero of the active row into the 2x2 leading block
// (each simultaneous row/column swap flips the sign), multiplies the pivot
// into the result and updates the trailing block; an all-zero active row
// means the Pfaffian is 0.
Rational pf(const SkewMatrix& a);

// Pfaffian of the submatrix on exactly the kept indices.
Rational pf_minor(const SkewMatrix& a, const IndexSet& kept);

// det(A) - Pf(A)^2; identically zero for every skew-symmetric A.
Rational cayley_residual(const SkewMatrix& a);

}  // namespace pfq

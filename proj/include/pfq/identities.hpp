#pragma once

#include <utility>

#include "pfq/matrix.hpp"
#include "pfq/pfaffian.hpp"

namespace pfq {

// Every function here evaluates one algebraic identity as LHS - RHS over
// exact rationals. A correct build returns literally zero on every valid
// input; anything else is a counterexample worth serializing.

// Deliberate sign corruption, used only to prove the checks can fail.
enum class SignFault { none, flip_f, flip_parity };

// Overlapping-minor Pfaffian relation: I1, I2 odd-cardinality subsets of
// [n], alternating sum over their symmetric difference.
Rational residual_wenzel(const SkewMatrix& a, const IndexSet& i1,
                         const IndexSet& i2);

// Laplace-style expansion of Pf over a kept even set `alpha` and a disjoint
// even block `beta`, anchored at position s (1-based in beta).
Rational residual_expansion(const SkewMatrix& a, const IndexSet& alpha,
                            const IndexSet& beta, int s);

// Four-index quadratic Pfaffian relation on deletion minors.
Rational residual_plucker4(const SkewMatrix& a, int i, int j, int k, int l);

// Dodgson condensation for determinants, n >= 2.
Rational residual_dodgson(const Matrix& m);

// Pfaffian of the block embedding vs (-1)^{n(n-1)/2} det.
Rational residual_godsil(const Matrix& m);

// Quadratic identity between Pf(E(A))Pf(A) and the single-pair splits, with
// word-sign factors f, g; p is the distinguished pair (1-based).
Rational residual_thm31(const SkewMatrix& a, const PairSet& e, int p,
                        SignFault fault = SignFault::none);

// Transposed-minor variant of the same identity.
Rational residual_cor32(const SkewMatrix& a, const PairSet& e, int p);

// Interleaved-pair specialization with every sign factor +1, evaluated for
// p = 1 in both minor patterns. Requires i1<j1<i2<j2<...<ik<jk and all pair
// sums i_l+j_l of one parity; without the parity condition some sign
// factors become -1 and the sign-free form does not hold.
std::pair<Rational, Rational> residual_cor33(const SkewMatrix& a,
                                             const PairSet& e);

// Determinant analogues over the one-sided mask E[A].
Rational residual_thm42(const Matrix& m, const PairSet& e, int p,
                        SignFault fault = SignFault::none);
Rational residual_thm43(const Matrix& m, const PairSet& e, int p);

// Alternating sum combining both determinant identities; vanishes term-wise
// at l = p.
Rational residual_cor44(const Matrix& m, const PairSet& e, int p);

}  // namespace pfq

#include "pfq/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfq {

namespace {

Word full_word(int n) {
  Word w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
  return w;
}

Rational pf_del(const SkewMatrix& a, std::initializer_list<int> deleted) {
  std::vector<int> d(deleted);
  std::sort(d.begin(), d.end());
  return pf(remove_rows_cols(a, IndexSet(std::move(d))));
}

Rational det_rc(const Matrix& m, int i, int j) {
  return det(remove_row_col(m, i, j));
}

}  // namespace

Rational residual_wenzel(const SkewMatrix& a, const IndexSet& i1,
                         const IndexSet& i2) {
  if (a.order() % 2 != 0) throw std::invalid_argument("even order required");
  if (i1.size() % 2 == 0 || i2.size() % 2 == 0) {
    throw std::invalid_argument("both index sets must have odd cardinality");
  }
  if (std::max(i1.max_index(), i2.max_index()) > a.order()) {
    throw std::out_of_range("index set outside [n]");
  }
  IndexSet diff = i1.sym_diff(i2);
  Rational total = 0;
  int tau = 0;
  for (int d : diff.indices()) {
    ++tau;
    Rational term = pf_minor(a, i1.with(d)) * pf_minor(a, i2.with(d));
    total += (tau % 2 == 0) ? term : -term;
  }
  return total;
}

Rational residual_expansion(const SkewMatrix& a, const IndexSet& alpha,
                            const IndexSet& beta, int s) {
  if (alpha.size() % 2 != 0) throw std::invalid_argument("alpha must be even");
  if (beta.size() % 2 != 0 || beta.empty()) {
    throw std::invalid_argument("beta must be a nonempty even set");
  }
  if (alpha.union_with(beta).size() != alpha.size() + beta.size()) {
    throw std::invalid_argument("alpha and beta must be disjoint");
  }
  const int two_p = beta.size();
  if (s < 1 || s > two_p) throw std::out_of_range("s outside [2p]");
  const int is = beta.indices()[static_cast<size_t>(s) - 1];

  Rational lhs = pf_minor(a, alpha) * pf_minor(a, alpha.union_with(beta));
  Rational rhs = 0;
  for (int l = 1; l <= two_p; ++l) {
    if (l == s) continue;  // the repeated-index term is defined to be zero
    const int il = beta.indices()[static_cast<size_t>(l) - 1];
    IndexSet pairset = IndexSet({std::min(is, il), std::max(is, il)});
    Rational term = pf_minor(a, alpha.union_with(pairset)) *
                    pf_minor(a, alpha.union_with(beta).minus(pairset));
    rhs += ((l + s + 1) % 2 == 0) ? term : -term;
  }
  return lhs - rhs;
}

Rational residual_plucker4(const SkewMatrix& a, int i, int j, int k, int l) {
  if (!(1 <= i && i < j && j < k && k < l && l <= a.order())) {
    throw std::invalid_argument("need 1 <= i < j < k < l <= n");
  }
  if (a.order() % 2 != 0) throw std::invalid_argument("even order required");
  return pf_del(a, {i, j, k, l}) * pf(a) -
         (pf_del(a, {i, j}) * pf_del(a, {k, l}) -
          pf_del(a, {i, k}) * pf_del(a, {j, l}) +
          pf_del(a, {i, l}) * pf_del(a, {j, k}));
}

Rational residual_dodgson(const Matrix& m) {
  if (!m.square() || m.rows() < 2) {
    throw std::invalid_argument("square matrix of order >= 2 required");
  }
  const int n = m.rows();
  Matrix inner = remove_row_col(remove_row_col(m, n, n), 1, 1);
  return det(inner) * det(m) -
         (det_rc(m, 1, 1) * det_rc(m, n, n) - det_rc(m, 1, n) * det_rc(m, n, 1));
}

Rational residual_godsil(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("square matrix required");
  const int n = m.rows();
  Rational sign = ((n * (n - 1) / 2) % 2 == 0) ? rat(1) : rat(-1);
  return pf(block_embed(m)) - sign * det(m);
}

Rational residual_thm31(const SkewMatrix& a, const PairSet& e, int p,
                        SignFault fault) {
  const int n = a.order();
  if (n % 2 != 0) throw std::invalid_argument("even order required");
  if (e.empty()) throw std::invalid_argument("mask must be nonempty");
  if (!e.skew_valid() || e.max_index() > n) {
    throw std::invalid_argument("mask not valid for a skew matrix of this order");
  }
  if (p < 1 || p > e.size()) throw std::out_of_range("p outside [k]");

  const SkewMatrix masked = mask_skew(a, e);
  const auto [ip, jp] = e.pair(p);
  const Word alln = full_word(n);

  Rational lhs = pf(masked) * pf(a);
  Rational split = pf(mask_skew(a, e.without(p))) * pf(mask_skew(a, e.only(p)));
  Rational sum = 0;
  for (int l = 1; l <= e.size(); ++l) {
    if (l == p) continue;
    const auto [il, jl] = e.pair(l);
    int f = s_sign(alln, {ip, jl}) * s_sign(alln, {jp, il});
    if (fault == SignFault::flip_f) f = -f;
    const int g = s_sign(alln, {ip, il}) * s_sign(alln, {jp, jl});
    // A zero word sign means the indices collide and the term vanishes;
    // the minors are not even well-formed then.
    Rational t1 = f == 0 ? rat(0)
                         : rat(f) * pf_del(masked, {ip, jl}) * pf_del(a, {jp, il});
    Rational t2 = g == 0 ? rat(0)
                         : rat(g) * pf_del(masked, {ip, il}) * pf_del(a, {jp, jl});
    sum += a.at(il, jl) * (t1 - t2);
  }
  return lhs - split - a.at(ip, jp) * sum;
}

Rational residual_cor32(const SkewMatrix& a, const PairSet& e, int p) {
  const int n = a.order();
  if (n % 2 != 0) throw std::invalid_argument("even order required");
  if (e.empty()) throw std::invalid_argument("mask must be nonempty");
  if (!e.skew_valid() || e.max_index() > n) {
    throw std::invalid_argument("mask not valid for a skew matrix of this order");
  }
  if (p < 1 || p > e.size()) throw std::out_of_range("p outside [k]");

  const SkewMatrix masked = mask_skew(a, e);
  const auto [ip, jp] = e.pair(p);
  const Word alln = full_word(n);

  Rational lhs = pf(masked) * pf(a);
  Rational split = pf(mask_skew(a, e.without(p))) * pf(mask_skew(a, e.only(p)));
  Rational sum = 0;
  for (int l = 1; l <= e.size(); ++l) {
    if (l == p) continue;
    const auto [il, jl] = e.pair(l);
    const int f = s_sign(alln, {ip, jl}) * s_sign(alln, {jp, il});
    const int g = s_sign(alln, {ip, il}) * s_sign(alln, {jp, jl});
    Rational t1 = f == 0 ? rat(0)
                         : rat(f) * pf_del(masked, {jp, il}) * pf_del(a, {ip, jl});
    Rational t2 = g == 0 ? rat(0)
                         : rat(g) * pf_del(masked, {jp, jl}) * pf_del(a, {ip, il});
    sum += a.at(il, jl) * (t1 - t2);
  }
  return lhs - split - a.at(ip, jp) * sum;
}

std::pair<Rational, Rational> residual_cor33(const SkewMatrix& a,
                                             const PairSet& e) {
  const int n = a.order();
  if (n % 2 != 0) throw std::invalid_argument("even order required");
  if (e.empty()) throw std::invalid_argument("mask must be nonempty");
  if (!e.skew_valid() || e.max_index() > n) {
    throw std::invalid_argument("mask not valid for a skew matrix of this order");
  }
  int prev = 0;
  for (const auto& [i, j] : e.pairs()) {
    if (i <= prev) throw std::invalid_argument("pairs must be fully interleaved");
    prev = j;
  }
  const auto [i1, j1] = e.pair(1);
  for (const auto& [i, j] : e.pairs()) {
    if ((i + j) % 2 != (i1 + j1) % 2) {
      throw std::invalid_argument(
          "pair index sums must share one parity (sign-free form)");
    }
  }

  const SkewMatrix masked = mask_skew(a, e);
  Rational lhs = pf(masked) * pf(a) -
                 pf(mask_skew(a, e.without(1))) * pf(mask_skew(a, e.only(1)));
  Rational s1 = 0, s2 = 0;
  for (int l = 2; l <= e.size(); ++l) {
    const auto [il, jl] = e.pair(l);
    s1 += a.at(il, jl) * (pf_del(masked, {i1, jl}) * pf_del(a, {j1, il}) -
                          pf_del(masked, {i1, il}) * pf_del(a, {j1, jl}));
    s2 += a.at(il, jl) * (pf_del(masked, {j1, il}) * pf_del(a, {i1, jl}) -
                          pf_del(masked, {j1, jl}) * pf_del(a, {i1, il}));
  }
  return {lhs - a.at(i1, j1) * s1, lhs - a.at(i1, j1) * s2};
}

namespace {

Rational det_mask_residual(const Matrix& m, const PairSet& e, int p,
                           bool swap_minors, SignFault fault) {
  if (!m.square()) throw std::invalid_argument("square matrix required");
  const int n = m.rows();
  if (e.empty()) throw std::invalid_argument("mask must be nonempty");
  if (e.max_index() > n) throw std::out_of_range("mask index > n");
  if (p < 1 || p > e.size()) throw std::out_of_range("p outside [k]");

  const Matrix masked = mask_entries(m, e);
  const auto [ip, jp] = e.pair(p);
  Rational lhs = det(masked) * det(m);
  Rational split =
      det(mask_entries(m, e.without(p))) * det(mask_entries(m, e.only(p)));
  Rational sum = 0;
  for (int l = 1; l <= e.size(); ++l) {
    if (l == p) continue;
    const auto [il, jl] = e.pair(l);
    int parity = ((il + jl + ip + jp) % 2 == 0) ? 1 : -1;
    if (fault == SignFault::flip_parity) parity = -parity;
    Rational minors = swap_minors
                          ? det_rc(masked, il, jp) * det_rc(m, ip, jl)
                          : det_rc(masked, ip, jl) * det_rc(m, il, jp);
    sum += rat(parity) * m.at(ip, jp) * m.at(il, jl) * minors;
  }
  // Identity: lhs = split - sum.
  return lhs - split + sum;
}

}  // namespace

Rational residual_thm42(const Matrix& m, const PairSet& e, int p,
                        SignFault fault) {
  return det_mask_residual(m, e, p, /*swap_minors=*/false, fault);
}

Rational residual_thm43(const Matrix& m, const PairSet& e, int p) {
  return det_mask_residual(m, e, p, /*swap_minors=*/true, SignFault::none);
}

Rational residual_cor44(const Matrix& m, const PairSet& e, int p) {
  if (!m.square()) throw std::invalid_argument("square matrix required");
  const int n = m.rows();
  if (e.empty()) throw std::invalid_argument("mask must be nonempty");
  if (e.max_index() > n) throw std::out_of_range("mask index > n");
  if (p < 1 || p > e.size()) throw std::out_of_range("p outside [k]");

  const Matrix masked = mask_entries(m, e);
  const auto [ip, jp] = e.pair(p);
  Rational total = 0;
  for (int l = 1; l <= e.size(); ++l) {
    const auto [il, jl] = e.pair(l);
    Rational inner = det_rc(masked, ip, jl) * det_rc(m, il, jp) -
                     det_rc(masked, il, jp) * det_rc(m, ip, jl);
    total += rat(((il + jl) % 2 == 0) ? 1 : -1) * m.at(il, jl) * inner;
  }
  return total;
}

}  // namespace pfq

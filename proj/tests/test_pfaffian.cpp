#include <doctest.h>

#include "pfq/instances.hpp"
#include "pfq/pfaffian.hpp"
#include "pfq/rng.hpp"

using namespace pfq;

TEST_CASE("permutation sign") {
  CHECK(perm_sign({1, 2, 3, 4}, 4) == 1);
  CHECK(perm_sign({2, 1, 3, 4}, 4) == -1);
  CHECK(perm_sign({1, 1, 2, 3}, 4) == 0);
  CHECK_THROWS(perm_sign({1, 2, 5, 4}, 4));
  CHECK_THROWS(perm_sign({1, 2, 3}, 4));
}

TEST_CASE("word sign") {
  CHECK(s_sign({1, 2, 3, 4}, {1, 2}) == 1);
  CHECK(s_sign({1, 2, 3, 4}, {2, 1}) == -1);
  CHECK(s_sign({1, 2, 3, 4}, {2, 5}) == 0);
  CHECK(s_sign({1, 2, 2, 4}, {1, 2}) == 0);
  CHECK(s_sign({1, 2, 3, 4}, {2, 2}) == 0);
  SUBCASE("s(alpha, alpha) = +1 for repeat-free alpha") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
      const int n = rng.uniform_int(1, 8);
      Word alpha;
      for (int v = 1; v <= n; ++v) alpha.push_back(v);
      // shuffle
      for (int i = n - 1; i > 0; --i) {
        std::swap(alpha[static_cast<size_t>(i)],
                  alpha[static_cast<size_t>(rng.uniform_int(0, i))]);
      }
      CHECK(s_sign(alpha, alpha) == 1);
    }
  }
}

TEST_CASE("pairings") {
  CHECK(perfect_pairings(0).size() == 1);
  CHECK(perfect_pairings(2).size() == 1);
  CHECK(perfect_pairings(4).size() == 3);
  CHECK(perfect_pairings(6).size() == 15);
  CHECK(perfect_pairings(8).size() == 105);
  CHECK_THROWS(perfect_pairings(14));
  CHECK_THROWS(perfect_pairings(3));
}

TEST_CASE("pfaffian by definition") {
  SUBCASE("order 2") {
    auto a = SkewMatrix::from_upper(2, {{1, 2, rat(9)}});
    CHECK(pf_definition(a) == rat(9));
  }
  SUBCASE("odd order is zero") {
    Rng rng(13);
    CHECK(pf_definition(random_skew(rng, 3, 9)) == 0);
    CHECK(pf_definition(random_skew(rng, 5, 9)) == 0);
  }
  SUBCASE("generic 4x4 formula a12 a34 - a13 a24 + a14 a23") {
    // distinct primes make the three monomials separable
    auto a = SkewMatrix::from_upper(4, {{1, 2, rat(2)},
                                        {1, 3, rat(3)},
                                        {1, 4, rat(5)},
                                        {2, 3, rat(7)},
                                        {2, 4, rat(11)},
                                        {3, 4, rat(13)}});
    CHECK(pf_definition(a) == rat(2 * 13 - 3 * 11 + 5 * 7));
  }
  SUBCASE("cap") {
    CHECK_THROWS(pf_definition(SkewMatrix::from_upper(14, {})));
  }
}

TEST_CASE("pfaffian elimination vs definition") {
  Rng rng(17);
  for (int n : {2, 4, 6, 8, 10}) {
    for (int t = 0; t < 60; ++t) {
      SkewMatrix a = random_skew(rng, n, 9);
      CHECK(pf(a) == pf_definition(a));
    }
  }
  SUBCASE("zero matrix") {
    CHECK(pf(SkewMatrix::from_upper(6, {})) == 0);
  }
  SUBCASE("block embedding of the identity") {
    CHECK(pf(block_embed(identity_matrix(3))) == rat(-1));
    CHECK(pf(block_embed(identity_matrix(2))) == rat(-1));
  }
  SUBCASE("sparse matrices exercise the pivot search") {
    for (int t = 0; t < 40; ++t) {
      const int n = 2 * rng.uniform_int(1, 5);
      std::vector<std::tuple<int, int, Rational>> upper;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (rng.chance(1, 3)) upper.emplace_back(i, j, rng.nonzero_entry(9));
        }
      }
      SkewMatrix a = SkewMatrix::from_upper(n, upper);
      CHECK(pf(a) == pf_definition(a));
    }
  }
}

TEST_CASE("pfaffian minors keep exactly the given indices") {
  Rng rng(19);
  SkewMatrix a = random_skew(rng, 4, 9);
  CHECK(pf_minor(a, IndexSet::full(4)) == pf(a));
  CHECK(pf_minor(a, IndexSet{}) == 1);
  CHECK(pf_minor(a, IndexSet{1, 2}) == a.at(1, 2));
  CHECK(pf_minor(a, IndexSet{2, 4}) == a.at(2, 4));
  CHECK_THROWS(pf_minor(a, IndexSet{5}));
}

TEST_CASE("cayley residual is identically zero") {
  Rng rng(37);
  for (int t = 0; t < 40; ++t) {
    const int n = rng.uniform_int(0, 8);
    CHECK(cayley_residual(random_skew(rng, n, 9)) == 0);
  }
  CHECK(cayley_residual(SkewMatrix::from_upper(6, {})) == 0);
}

TEST_CASE("pfaffian symmetries") {
  Rng rng(43);
  SUBCASE("transpose and negation") {
    for (int t = 0; t < 30; ++t) {
      const int n = 2 * rng.uniform_int(1, 5);
      SkewMatrix a = random_skew(rng, n, 9);
      Rational expected = (n / 2 % 2 == 0) ? pf(a) : -pf(a);
      CHECK(pf(a.negated()) == expected);
      CHECK(pf(a.transposed()) == expected);
    }
  }
  SUBCASE("scaling") {
    for (int t = 0; t < 20; ++t) {
      const int n = 2 * rng.uniform_int(1, 4);
      SkewMatrix a = random_skew(rng, n, 9);
      Rational c = rat(rng.uniform_int(-5, 5), rng.uniform_int(1, 3));
      Rational factor = 1;
      for (int i = 0; i < n / 2; ++i) factor *= c;
      CHECK(pf(a.scaled(c)) == factor * pf(a));
    }
  }
  SUBCASE("simultaneous permutation equivariance") {
    for (int t = 0; t < 30; ++t) {
      const int n = 2 * rng.uniform_int(1, 4);
      SkewMatrix a = random_skew(rng, n, 9);
      // random permutation and its sign
      std::vector<int> perm(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
      for (int i = n - 1; i > 0; --i) {
        std::swap(perm[static_cast<size_t>(i)],
                  perm[static_cast<size_t>(rng.uniform_int(0, i))]);
      }
      Matrix b(n, n);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          b.set(i, j, a.at(perm[static_cast<size_t>(i) - 1],
                           perm[static_cast<size_t>(j) - 1]));
        }
      }
      const int sign = perm_sign(perm, n);
      CHECK(pf(SkewMatrix::from_matrix(b)) == rat(sign) * pf(a));
    }
  }
}

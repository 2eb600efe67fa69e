#include <doctest.h>

#include <set>

#include <sstream>

#include "oracles.hpp"
#include "pfq/instances.hpp"
#include "pfq/matrix.hpp"
#include "pfq/rng.hpp"

using namespace pfq;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == rat(1, 2));
  CHECK(parse_rational("-4/2") == rat(-2));
  CHECK(parse_rational("7") == rat(7));
  CHECK(to_string(rat(-3, 9)) == "-1/3");
  CHECK(to_string(rat(5)) == "5");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("skew construction") {
  SUBCASE("2x2 single entry") {
    auto a = SkewMatrix::from_upper(2, {{1, 2, rat(5)}});
    CHECK(a.at(1, 2) == rat(5));
    CHECK(a.at(2, 1) == rat(-5));
    CHECK(a.at(1, 1) == 0);
  }
  SUBCASE("empty input gives the zero matrix") {
    auto a = SkewMatrix::from_upper(3, {});
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) CHECK(a.at(i, j) == 0);
    }
  }
  SUBCASE("rejects bad entries") {
    CHECK_THROWS(SkewMatrix::from_upper(3, {{2, 2, rat(1)}}));
    CHECK_THROWS(SkewMatrix::from_upper(3, {{3, 1, rat(1)}}));
    CHECK_THROWS(SkewMatrix::from_upper(3, {{1, 4, rat(1)}}));
    CHECK_THROWS(
        SkewMatrix::from_upper(3, {{1, 2, rat(1)}, {1, 2, rat(2)}}));
    Matrix m(2, 2);
    m.set(1, 2, rat(3));
    CHECK_THROWS(SkewMatrix::from_matrix(m));  // missing mirror entry
  }
}

TEST_CASE("minor deletion") {
  Rng rng(7);
  SkewMatrix a = random_skew(rng, 4, 9);
  SUBCASE("empty deletion is identity") {
    CHECK(remove_rows_cols(a, IndexSet{}) == a);
  }
  SUBCASE("full deletion gives the 0x0 matrix") {
    auto e = remove_rows_cols(a, IndexSet{1, 2, 3, 4});
    CHECK(e.order() == 0);
  }
  SUBCASE("middle deletion reads the corner entries") {
    auto m = remove_rows_cols(a, IndexSet{2, 3});
    CHECK(m.order() == 2);
    CHECK(m.at(1, 2) == a.at(1, 4));
    CHECK(m.at(2, 1) == -a.at(1, 4));
  }
  SUBCASE("deletion minors stay skew for random sets") {
    for (int t = 0; t < 50; ++t) {
      const int n = rng.uniform_int(1, 8);
      SkewMatrix b = random_skew(rng, n, 9);
      std::vector<int> del;
      for (int v = 1; v <= n; ++v) {
        if (rng.chance(1, 2)) del.push_back(v);
      }
      // from_matrix inside keep_rows_cols revalidates skew symmetry
      auto sub = remove_rows_cols(b, IndexSet(del));
      CHECK(sub.order() == n - static_cast<int>(del.size()));
    }
  }
  SUBCASE("out of range") {
    CHECK_THROWS(remove_rows_cols(a, IndexSet{5}));
  }
}

TEST_CASE("row/column minors") {
  SUBCASE("1x1 gives the empty matrix whose det is 1") {
    Matrix m(1, 1);
    m.set(1, 1, rat(9));
    auto e = remove_row_col(m, 1, 1);
    CHECK(e.rows() == 0);
    CHECK(det(e) == 1);
  }
  SUBCASE("identity minors") {
    Matrix i3 = identity_matrix(3);
    CHECK(remove_row_col(i3, 1, 1) == identity_matrix(2));
    CHECK(det(remove_row_col(i3, 1, 2)) == 0);
  }
}

TEST_CASE("masking") {
  Rng rng(11);
  SUBCASE("skew mask zeroes both mirror entries") {
    SkewMatrix a = random_skew(rng, 4, 9);
    auto e = PairSet::skew_mask({{1, 4}, {2, 3}, {3, 4}});
    SkewMatrix b = mask_skew(a, e);
    CHECK(b.at(1, 4) == 0);
    CHECK(b.at(4, 1) == 0);
    CHECK(b.at(2, 3) == 0);
    CHECK(b.at(3, 4) == 0);
    CHECK(b.at(1, 2) == a.at(1, 2));
    CHECK(b.at(1, 3) == a.at(1, 3));
    CHECK(b.at(2, 4) == a.at(2, 4));
  }
  SUBCASE("empty mask is identity, full mask zeroes everything") {
    SkewMatrix a = random_skew(rng, 4, 9);
    CHECK(mask_skew(a, PairSet::skew_mask({})) == a);
    std::vector<PairSet::Pair> all;
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) all.emplace_back(i, j);
    }
    SkewMatrix z = mask_skew(a, PairSet::skew_mask(all));
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) CHECK(z.at(i, j) == 0);
    }
  }
  SUBCASE("skew mask idempotence") {
    for (int t = 0; t < 30; ++t) {
      const int n = 2 * rng.uniform_int(1, 4);
      SkewMatrix a = random_skew(rng, n, 9);
      std::set<std::pair<int, int>> ps;
      while (static_cast<int>(ps.size()) < std::min(3, n / 2)) {
        int i = rng.uniform_int(1, n - 1);
        ps.insert({i, rng.uniform_int(i + 1, n)});
      }
      auto e = PairSet::skew_mask({ps.begin(), ps.end()});
      CHECK(mask_skew(mask_skew(a, e), e) == mask_skew(a, e));
    }
  }
}

TEST_CASE("general mask") {
  // the displayed diagonal/lower-triangle example shape
  Matrix m(4, 4);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) m.set(i, j, rat(10 * i + j));
  }
  auto e = PairSet::general_mask({{1, 2}, {2, 2}, {3, 1}});
  Matrix b = mask_entries(m, e);
  CHECK(b.at(1, 2) == 0);
  CHECK(b.at(2, 2) == 0);
  CHECK(b.at(3, 1) == 0);
  CHECK(b.at(2, 1) == m.at(2, 1));  // transposed positions untouched
  CHECK(b.at(1, 3) == m.at(1, 3));
  int changed = 0;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) changed += (b.at(i, j) != m.at(i, j));
  }
  CHECK(changed == 3);

  auto single = PairSet::general_mask({{3, 4}});
  Matrix c = mask_entries(m, single);
  CHECK(c.at(3, 4) == 0);
  CHECK(c.at(4, 3) == m.at(4, 3));
  CHECK(mask_entries(m, PairSet::general_mask({})) == m);
}

TEST_CASE("determinant") {
  SUBCASE("small fixed values") {
    CHECK(det(identity_matrix(5)) == 1);
    Matrix m(2, 2, {rat(1), rat(2), rat(3), rat(4)});
    CHECK(det(m) == rat(-2));
    CHECK(det(Matrix(0, 0)) == 1);
  }
  SUBCASE("matches the cofactor oracle on random rational matrices") {
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
      const int n = rng.uniform_int(1, 5);
      Matrix m(n, n);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          m.set(i, j, rat(rng.uniform_int(-9, 9), rng.uniform_int(1, 4)));
        }
      }
      CHECK(det(m) == testing::det_cofactor(m));
      CHECK(det_serial(m) == testing::det_cofactor(m));
    }
  }
  SUBCASE("multiplicativity and transpose invariance") {
    Rng rng(29);
    for (int t = 0; t < 25; ++t) {
      Matrix a = random_matrix(rng, 4, 9);
      Matrix b = random_matrix(rng, 4, 9);
      CHECK(det(matrix_product(a, b)) == det(a) * det(b));
      CHECK(det(a.transpose()) == det(a));
    }
  }
  SUBCASE("parallel path agrees with the serial reference") {
    Rng rng(31);
    Matrix m = random_matrix(rng, 60, 9);
    CHECK(det(m) == det_serial(m));
  }
}

TEST_CASE("block embedding") {
  SUBCASE("1x1") {
    Matrix m(1, 1);
    m.set(1, 1, rat(7));
    SkewMatrix s = block_embed(m);
    CHECK(s.order() == 2);
    CHECK(s.at(1, 2) == rat(7));
    CHECK(s.at(2, 1) == rat(-7));
  }
  SUBCASE("rejects non-square") {
    CHECK_THROWS(block_embed(Matrix(2, 3)));
  }
}

TEST_CASE("matrix text round trip") {
  Rng rng(41);
  Matrix m(3, 3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      m.set(i, j, rat(rng.uniform_int(-9, 9), rng.uniform_int(1, 5)));
    }
  }
  std::ostringstream os;
  write_matrix(os, m);
  std::istringstream is(os.str());
  CHECK(read_matrix(is) == m);

  std::istringstream bad("2\n0 1\n-2 0\n");
  CHECK_THROWS(read_skew_matrix(bad));  // -2 != -(1)
}

TEST_CASE("pair list text round trip") {
  auto e = PairSet::skew_mask({{1, 4}, {2, 3}});
  std::ostringstream os;
  write_pairs(os, e);
  std::istringstream is(os.str());
  PairSet back = read_pairs(is, true);
  CHECK(back.pairs() == e.pairs());
}

#include "pfq/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pfq {

// ---------- IndexSet ----------

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1) throw std::invalid_argument("index set: indices are 1-based");
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw std::invalid_argument("index set must be strictly increasing");
    }
  }
}

IndexSet IndexSet::full(int n) {
  std::vector<int> v(static_cast<size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  return IndexSet(std::move(v));
}

bool IndexSet::contains(int v) const {
  return std::binary_search(indices_.begin(), indices_.end(), v);
}

IndexSet IndexSet::complement(int n) const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n) - indices_.size());
  for (int v = 1; v <= n; ++v) {
    if (!contains(v)) out.push_back(v);
  }
  return IndexSet(std::move(out));
}

IndexSet IndexSet::sym_diff(const IndexSet& other) const {
  std::vector<int> out;
  std::set_symmetric_difference(indices_.begin(), indices_.end(),
                                other.indices_.begin(), other.indices_.end(),
                                std::back_inserter(out));
  return IndexSet(std::move(out));
}

IndexSet IndexSet::union_with(const IndexSet& other) const {
  std::vector<int> out;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(out));
  return IndexSet(std::move(out));
}

IndexSet IndexSet::minus(const IndexSet& other) const {
  std::vector<int> out;
  std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                      other.indices_.end(), std::back_inserter(out));
  return IndexSet(std::move(out));
}

// ---------- PairSet ----------

PairSet::PairSet(std::vector<Pair> pairs, bool skew)
    : pairs_(std::move(pairs)), skew_valid_(skew) {}

static void sort_and_check_pairs(std::vector<PairSet::Pair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  for (size_t l = 0; l < pairs.size(); ++l) {
    if (pairs[l].first < 1 || pairs[l].second < 1) {
      throw std::invalid_argument("pair set: indices are 1-based");
    }
    if (l > 0 && pairs[l] == pairs[l - 1]) {
      throw std::invalid_argument("pair set: duplicate pair");
    }
  }
}

PairSet PairSet::skew_mask(std::vector<Pair> pairs) {
  sort_and_check_pairs(pairs);
  for (const auto& [i, j] : pairs) {
    if (i >= j) throw std::invalid_argument("skew mask needs i < j per pair");
  }
  return PairSet(std::move(pairs), true);
}

PairSet PairSet::general_mask(std::vector<Pair> pairs) {
  sort_and_check_pairs(pairs);
  return PairSet(std::move(pairs), false);
}

PairSet::Pair PairSet::pair(int l) const {
  if (l < 1 || l > size()) throw std::out_of_range("pair index");
  return pairs_[static_cast<size_t>(l) - 1];
}

int PairSet::max_index() const {
  int m = 0;
  for (const auto& [i, j] : pairs_) m = std::max({m, i, j});
  return m;
}

PairSet PairSet::without(int l) const {
  pair(l);  // bounds check
  std::vector<Pair> out;
  for (int i = 1; i <= size(); ++i) {
    if (i != l) out.push_back(pairs_[static_cast<size_t>(i) - 1]);
  }
  return PairSet(std::move(out), skew_valid_);
}

PairSet PairSet::only(int l) const { return PairSet({pair(l)}, skew_valid_); }

// ---------- Matrix ----------

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  entries_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
}

Matrix::Matrix(int rows, int cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  if (entries_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    throw std::invalid_argument("entry count does not match dimensions");
  }
}

int Matrix::offset(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  return (i - 1) * cols_ + (j - 1);
}

const Rational& Matrix::at(int i, int j) const {
  return entries_[static_cast<size_t>(offset(i, j))];
}

void Matrix::set(int i, int j, Rational value) {
  entries_[static_cast<size_t>(offset(i, j))] = std::move(value);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1; j <= cols_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

Matrix identity_matrix(int n) {
  Matrix m(n, n);
  for (int i = 1; i <= n; ++i) m.set(i, i, rat(1));
  return m;
}

Matrix matrix_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= b.cols(); ++j) {
      Rational s = 0;
      for (int k = 1; k <= a.cols(); ++k) s += a.at(i, k) * b.at(k, j);
      c.set(i, j, std::move(s));
    }
  }
  return c;
}

// ---------- SkewMatrix ----------

SkewMatrix SkewMatrix::from_upper(
    int n, const std::vector<std::tuple<int, int, Rational>>& upper) {
  Matrix grid(n, n);
  std::vector<std::pair<int, int>> seen;
  for (const auto& [i, j, v] : upper) {
    if (i < 1 || j <= i || j > n) {
      throw std::invalid_argument("skew entries need 1 <= i < j <= n");
    }
    seen.emplace_back(i, j);
    grid.set(i, j, v);
    grid.set(j, i, -v);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("duplicate skew entry");
  }
  return SkewMatrix(std::move(grid));
}

SkewMatrix SkewMatrix::from_matrix(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("skew matrix must be square");
  for (int i = 1; i <= m.rows(); ++i) {
    if (m.at(i, i) != 0) throw std::invalid_argument("nonzero diagonal");
    for (int j = i + 1; j <= m.cols(); ++j) {
      if (m.at(i, j) != -m.at(j, i)) {
        throw std::invalid_argument("matrix is not skew-symmetric");
      }
    }
  }
  return SkewMatrix(m);
}

SkewMatrix SkewMatrix::negated() const {
  int n = order();
  Matrix g(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) g.set(i, j, -at(i, j));
  }
  return SkewMatrix(std::move(g));
}

SkewMatrix SkewMatrix::scaled(const Rational& c) const {
  int n = order();
  Matrix g(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) g.set(i, j, c * at(i, j));
  }
  return SkewMatrix(std::move(g));
}

// ---------- minors and masks ----------

SkewMatrix keep_rows_cols(const SkewMatrix& a, const IndexSet& kept) {
  if (kept.max_index() > a.order()) throw std::out_of_range("kept index > n");
  const auto& idx = kept.indices();
  int m = kept.size();
  Matrix g(m, m);
  for (int r = 1; r <= m; ++r) {
    for (int c = 1; c <= m; ++c) {
      g.set(r, c, a.at(idx[static_cast<size_t>(r) - 1],
                       idx[static_cast<size_t>(c) - 1]));
    }
  }
  return SkewMatrix::from_matrix(g);
}

SkewMatrix remove_rows_cols(const SkewMatrix& a, const IndexSet& deleted) {
  if (deleted.max_index() > a.order()) {
    throw std::out_of_range("deleted index > n");
  }
  return keep_rows_cols(a, deleted.complement(a.order()));
}

Matrix remove_row_col(const Matrix& m, int i, int j) {
  if (i < 1 || i > m.rows() || j < 1 || j > m.cols()) {
    throw std::out_of_range("minor index out of range");
  }
  Matrix out(m.rows() - 1, m.cols() - 1);
  int r = 0;
  for (int a = 1; a <= m.rows(); ++a) {
    if (a == i) continue;
    ++r;
    int c = 0;
    for (int b = 1; b <= m.cols(); ++b) {
      if (b == j) continue;
      out.set(r, ++c, m.at(a, b));
    }
  }
  return out;
}

SkewMatrix mask_skew(const SkewMatrix& a, const PairSet& e) {
  if (!e.skew_valid()) throw std::invalid_argument("pair set is not a skew mask");
  if (e.max_index() > a.order()) throw std::out_of_range("mask index > n");
  Matrix g = a.as_matrix();
  for (const auto& [i, j] : e.pairs()) {
    g.set(i, j, rat(0));
    g.set(j, i, rat(0));
  }
  return SkewMatrix::from_matrix(g);
}

Matrix mask_entries(const Matrix& m, const PairSet& e) {
  if (e.max_index() > std::max(m.rows(), m.cols())) {
    throw std::out_of_range("mask index out of range");
  }
  Matrix g = m;
  for (const auto& [i, j] : e.pairs()) g.set(i, j, rat(0));
  return g;
}

SkewMatrix block_embed(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("block embedding needs a square matrix");
  int n = a.rows();
  Matrix g(2 * n, 2 * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      g.set(i, n + j, a.at(i, j));
      g.set(n + j, i, -a.at(i, j));
    }
  }
  return SkewMatrix::from_matrix(g);
}

// ---------- determinant ----------

namespace {

Rational det_bareiss(const Matrix& m, bool parallel) {
  if (!m.square()) throw std::invalid_argument("determinant needs a square matrix");
  const int n = m.rows();
  if (n == 0) return rat(1);

  // Scale each row to integers, remembering the denominator product.
  std::vector<mpz_class> w(static_cast<size_t>(n) * static_cast<size_t>(n));
  auto cell = [&](int i, int j) -> mpz_class& {
    return w[static_cast<size_t>(i) * static_cast<size_t>(n) +
             static_cast<size_t>(j)];
  };
  mpz_class denom = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              m.at(i + 1, j + 1).get_den().get_mpz_t());
    }
    for (int j = 0; j < n; ++j) {
      const Rational& v = m.at(i + 1, j + 1);
      mpz_class scale = l / v.get_den();
      cell(i, j) = v.get_num() * scale;
    }
    denom *= l;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (cell(k, k) == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r) {
        if (cell(r, k) != 0) {
          piv = r;
          break;
        }
      }
      if (piv < 0) return rat(0);
      for (int j = 0; j < n; ++j) std::swap(cell(k, j), cell(piv, j));
      sign = -sign;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && n - k > 24)
#endif
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = cell(k, k) * cell(i, j) - cell(i, k) * cell(k, j);
        mpz_divexact(cell(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      cell(i, k) = 0;
    }
    prev = cell(k, k);
  }
  (void)parallel;

  Rational out(sign > 0 ? cell(n - 1, n - 1) : mpz_class(-cell(n - 1, n - 1)),
               denom);
  out.canonicalize();
  return out;
}

}  // namespace

Rational det(const Matrix& m) { return det_bareiss(m, true); }
Rational det_serial(const Matrix& m) { return det_bareiss(m, false); }

// ---------- text formats ----------

Matrix read_matrix(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 0) throw std::invalid_argument("matrix header: expected order n");
  Matrix m(n, n);
  std::string tok;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!(in >> tok)) throw std::invalid_argument("matrix body: too few entries");
      m.set(i, j, parse_rational(tok));
    }
  }
  return m;
}

SkewMatrix read_skew_matrix(std::istream& in) {
  return SkewMatrix::from_matrix(read_matrix(in));
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << '\n';
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) {
      if (j > 1) out << ' ';
      out << to_string(m.at(i, j));
    }
    out << '\n';
  }
}

PairSet read_pairs(std::istream& in, bool skew) {
  std::vector<PairSet::Pair> pairs;
  int i = 0, j = 0;
  while (in >> i >> j) pairs.emplace_back(i, j);
  return skew ? PairSet::skew_mask(std::move(pairs))
              : PairSet::general_mask(std::move(pairs));
}

void write_pairs(std::ostream& out, const PairSet& e) {
  for (const auto& [i, j] : e.pairs()) out << i << ' ' << j << '\n';
}

}  // namespace pfq

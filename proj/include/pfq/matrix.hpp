#pragma once

#include <initializer_list>
#include <iosfwd>
#include <tuple>
#include <utility>
#include <vector>

#include "pfq/rational.hpp"

namespace pfq {

// Strictly increasing list of 1-based row/column indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<int> indices);
  IndexSet(std::initializer_list<int> indices)
      : IndexSet(std::vector<int>(indices)) {}

  static IndexSet full(int n);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool contains(int v) const;
  int max_index() const { return indices_.empty() ? 0 : indices_.back(); }

  IndexSet complement(int n) const;
  IndexSet sym_diff(const IndexSet& other) const;
  IndexSet union_with(const IndexSet& other) const;
  IndexSet minus(const IndexSet& other) const;
  IndexSet with(int v) const { return sym_diff(IndexSet({v})); }

  bool operator==(const IndexSet& other) const = default;

 private:
  std::vector<int> indices_;
};

// An ordered list of index pairs used to select matrix entries.
// Two flavours share the representation:
//   - skew masks require i < j per pair (both mirror entries get zeroed),
//   - general masks allow any (i, j), including diagonal and lower entries.
// Pairs are kept sorted lexicographically; duplicates are rejected.
class PairSet {
 public:
  using Pair = std::pair<int, int>;

  static PairSet skew_mask(std::vector<Pair> pairs);
  static PairSet general_mask(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }
  Pair pair(int l) const;  // 1-based
  bool skew_valid() const { return skew_valid_; }
  int max_index() const;

  PairSet without(int l) const;  // all pairs except the l-th (1-based)
  PairSet only(int l) const;     // just the l-th pair

 private:
  PairSet(std::vector<Pair> pairs, bool skew);
  std::vector<Pair> pairs_;
  bool skew_valid_ = false;
};

// Dense matrix over Rational. All public indices are 1-based and
// bounds-checked; values are not mutated after construction except through
// set(), which builders use before handing the matrix out.
class Matrix {
 public:
  Matrix(int rows, int cols);
  Matrix(int rows, int cols, std::vector<Rational> row_major);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Rational& at(int i, int j) const;
  void set(int i, int j, Rational value);

  Matrix transpose() const;
  bool operator==(const Matrix& other) const;

 private:
  int offset(int i, int j) const;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix identity_matrix(int n);
Matrix matrix_product(const Matrix& a, const Matrix& b);

// Skew-symmetric square matrix: a_ij = -a_ji, zero diagonal, checked at
// construction.
class SkewMatrix {
 public:
  // Entries (i, j, v) with i < j; everything unspecified is zero.
  static SkewMatrix from_upper(
      int n, const std::vector<std::tuple<int, int, Rational>>& upper);
  static SkewMatrix from_matrix(const Matrix& m);

  int order() const { return grid_.rows(); }
  const Rational& at(int i, int j) const { return grid_.at(i, j); }
  const Matrix& as_matrix() const { return grid_; }

  SkewMatrix negated() const;
  SkewMatrix transposed() const { return negated(); }
  SkewMatrix scaled(const Rational& c) const;

  bool operator==(const SkewMatrix& other) const = default;

 private:
  explicit SkewMatrix(Matrix grid) : grid_(std::move(grid)) {}
  Matrix grid_;
};

// Minor by deleting the rows and columns in `deleted`.
SkewMatrix remove_rows_cols(const SkewMatrix& a, const IndexSet& deleted);
// Submatrix keeping exactly the rows and columns in `kept`.
SkewMatrix keep_rows_cols(const SkewMatrix& a, const IndexSet& kept);
// Minor by deleting row i and column j.
Matrix remove_row_col(const Matrix& m, int i, int j);

// Zeroes both (i,j) and (j,i) for every pair; stays skew-symmetric.
SkewMatrix mask_skew(const SkewMatrix& a, const PairSet& e);
// Zeroes only the listed positions.
Matrix mask_entries(const Matrix& m, const PairSet& e);

// The order-2n skew embedding [[0, A], [-A^T, 0]] of a square matrix.
SkewMatrix block_embed(const Matrix& a);

// Exact determinant by fraction-free (Bareiss) elimination after clearing
// row denominators; order-0 matrix gives 1. det() parallelizes the row
// updates with OpenMP for large orders; det_serial() is the plain loop kept
// as the reference path.
Rational det(const Matrix& m);
Rational det_serial(const Matrix& m);

// Text format: first line "n", then n lines of n whitespace-separated
// rationals ("p/q" or plain integers).
Matrix read_matrix(std::istream& in);
SkewMatrix read_skew_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& m);

// Pair list format: one "i j" pair per line.
PairSet read_pairs(std::istream& in, bool skew);
void write_pairs(std::ostream& out, const PairSet& e);

}  // namespace pfq

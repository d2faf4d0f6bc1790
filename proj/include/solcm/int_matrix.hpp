#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace solcm {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Convention used throughout the library: when a matrix presents a group,
/// rows index generators and columns are relators.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  /// 1x1 (or n x n scalar) multiplication map.
  static IntMatrix scalar(std::size_t n, const Integer& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const;

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;
  IntMatrix column(std::size_t j) const;
  IntMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

  // Elementary operations, used by the Smith reduction and by tests that
  // build unimodular matrices.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// [a | b]; row counts must agree.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// [a ; b]; column counts must agree.
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// Block-diagonal sum.
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);

/// Rank over the prime field of order p, by Gaussian elimination mod p.
std::size_t rank_mod_p(const IntMatrix& a, const Integer& p);
/// Rank over the rationals, by Gaussian elimination on exact fractions.
std::size_t rank_over_rationals(const IntMatrix& a);

struct SmithForm {
  IntMatrix U; ///< rows x rows, unimodular
  IntMatrix D; ///< same shape as the input
  IntMatrix V; ///< cols x cols, unimodular
  std::size_t rank = 0;

  /// The first min(rows, cols) diagonal entries of D.
  std::vector<Integer> diagonal() const;
};

/// U * A * V = D with D diagonal, d1 | d2 | ..., all entries >= 0.
///
/// Elementary-operation reduction, pivoting on the entry of least absolute
/// value. Deterministic.
SmithForm smith_normal_form(const IntMatrix& a);

/// Basis (as columns) of the integer kernel {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// An integer solution of A x = b (b a column), if one exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

/// Whether every column of b lies in the integer column span of a.
bool in_column_span(const IntMatrix& a, const IntMatrix& b);

} // namespace solcm

#include "solcm/int_matrix.hpp"

#include "solcm/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace solcm {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw InvalidArgument("IntMatrix: entry count does not match rows x cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::scalar(std::size_t n, const Integer& value) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = value;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Integer> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c)
      throw InvalidArgument("IntMatrix::from_rows: ragged rows");
    for (long v : row)
      entries.emplace_back(v);
  }
  return IntMatrix(r, c, std::move(entries));
}

const Integer& IntMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw InvalidArgument("IntMatrix::at: index out of range");
  return (*this)(i, j);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0)
        return false;
  return true;
}

IntMatrix IntMatrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

IntMatrix IntMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                           std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw InvalidArgument("IntMatrix::block: out of range");
  IntMatrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j)
      b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(src, j) != 0)
      (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, src) != 0)
      (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw InvalidArgument("IntMatrix: shape mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0)
          c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InvalidArgument("IntMatrix: shape mismatch in sum");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k)
    c.data_[k] += b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InvalidArgument("IntMatrix: shape mismatch in difference");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k)
    c.data_[k] -= b.data_[k];
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw InvalidArgument("hstack: row counts differ");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols())
    throw InvalidArgument("vstack: column counts differ");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      c(a.rows() + i, j) = b(i, j);
  }
  return c;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw InvalidArgument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0)
    return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0)
        ++swap;
      if (swap == n)
        return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank_mod_p(const IntMatrix& a, const Integer& p) {
  if (p < 2)
    throw InvalidArgument("rank_mod_p: modulus must be >= 2");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), p.get_mpz_t());

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0)
      ++pivot;
    if (pivot == m.rows())
      continue;
    m.swap_rows(rank, pivot);
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), m(rank, col).get_mpz_t(), p.get_mpz_t()) == 0)
      throw InvalidArgument("rank_mod_p: modulus is not prime");
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0)
        continue;
      Integer factor = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(i, j) -= factor * m(rank, j);
        mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), p.get_mpz_t());
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_over_rationals(const IntMatrix& a) {
  std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m[i][j] = mpq_class(a(i, j));

  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && m[pivot][col] == 0)
      ++pivot;
    if (pivot == a.rows())
      continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (m[i][col] == 0)
        continue;
      mpq_class factor = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < a.cols(); ++j)
        m[i][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  const std::size_t n = std::min(D.rows(), D.cols());
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    d.push_back(D(i, i));
  return d;
}

namespace {

// Position of the nonzero entry of least absolute value in the trailing
// block D[t.., t..]; ties broken by row-major order.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0)
        continue;
      Integer v = abs(d(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
        if (best_abs == 1)
          return best;
      }
    }
  return best;
}

// Clears row t and column t of D outside the pivot, re-pivoting on the
// smallest remainder until the pivot divides its whole row and column.
void clear_cross(IntMatrix& d, IntMatrix& u, IntMatrix& v, std::size_t t) {
  for (;;) {
    bool clean = true;
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (d(i, t) == 0)
        continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
      Integer neg = -q;
      d.add_row_multiple(i, t, neg);
      u.add_row_multiple(i, t, neg);
      if (d(i, t) != 0)
        clean = false;
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (d(t, j) == 0)
        continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
      Integer neg = -q;
      d.add_col_multiple(j, t, neg);
      v.add_col_multiple(j, t, neg);
      if (d(t, j) != 0)
        clean = false;
    }
    if (clean)
      return;

    // Move the smallest remaining entry of the cross onto the pivot.
    std::size_t bi = t, bj = t;
    Integer best = abs(d(t, t));
    for (std::size_t i = t + 1; i < d.rows(); ++i)
      if (d(i, t) != 0 && abs(d(i, t)) < best) {
        best = abs(d(i, t));
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < d.cols(); ++j)
      if (d(t, j) != 0 && abs(d(t, j)) < best) {
        best = abs(d(t, j));
        bi = t;
        bj = j;
      }
    d.swap_rows(t, bi);
    u.swap_rows(t, bi);
    d.swap_cols(t, bj);
    v.swap_cols(t, bj);
  }
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()), 0};
  IntMatrix& d = s.D;
  const std::size_t n = std::min(a.rows(), a.cols());

  std::size_t t = 0;
  for (; t < n; ++t) {
    auto pivot = min_pivot(d, t);
    if (!pivot)
      break;
    d.swap_rows(t, pivot->first);
    s.U.swap_rows(t, pivot->first);
    d.swap_cols(t, pivot->second);
    s.V.swap_cols(t, pivot->second);

    for (;;) {
      clear_cross(d, s.U, s.V, t);
      // Divisibility: fold an offending row into the pivot row and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            s.U.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  s.rank = t;
  return s;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  const std::size_t n = a.cols();
  return s.V.block(0, s.rank, n, n - s.rank);
}

namespace {

bool solve_with(const SmithForm& s, const IntMatrix& b, std::size_t col, IntMatrix* x) {
  // D y = U b, x = V y.
  const std::size_t m = s.U.rows();
  const std::size_t n = s.V.rows();
  std::vector<Integer> c(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      if (s.U(i, k) != 0 && b(k, col) != 0)
        c[i] += s.U(i, k) * b(k, col);
  std::vector<Integer> y(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < s.rank) {
      const Integer& di = s.D(i, i);
      if (!mpz_divisible_p(c[i].get_mpz_t(), di.get_mpz_t()))
        return false;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), di.get_mpz_t());
    } else if (c[i] != 0) {
      return false;
    }
  }
  if (x) {
    *x = IntMatrix(n, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < s.rank; ++k)
        if (s.V(i, k) != 0 && y[k] != 0)
          (*x)(i, 0) += s.V(i, k) * y[k];
  }
  return true;
}

} // namespace

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (b.rows() != a.rows() || b.cols() != 1)
    throw InvalidArgument("solve_integer: right-hand side must be a column of matching height");
  SmithForm s = smith_normal_form(a);
  IntMatrix x;
  if (!solve_with(s, b, 0, &x))
    return std::nullopt;
  return x;
}

bool in_column_span(const IntMatrix& a, const IntMatrix& b) {
  if (b.rows() != a.rows())
    throw InvalidArgument("in_column_span: row counts differ");
  if (b.cols() == 0 || b.is_zero())
    return true;
  SmithForm s = smith_normal_form(a);
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!solve_with(s, b, j, nullptr))
      return false;
  return true;
}

} // namespace solcm

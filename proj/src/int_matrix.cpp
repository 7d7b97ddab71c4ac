#include "etalehom/int_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "etalehom/errors.hpp"

namespace etalehom {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ValidationError("ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& entries, std::size_t rows,
                              std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size() && i < rows && i < cols; ++i)
    m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows,
                               std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      std::ostringstream msg;
      msg << "row " << i << " has " << rows[i].size() << " entries, expected " << cols;
      throw ValidationError(msg.str());
    }
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
  }
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::row_range(std::size_t begin, std::size_t end) const {
  assert(begin <= end && end <= rows_);
  IntMatrix m(end - begin, cols_);
  std::copy(data_.begin() + begin * cols_, data_.begin() + end * cols_, m.data_.begin());
  return m;
}

IntMatrix IntMatrix::col_range(std::size_t begin, std::size_t end) const {
  assert(begin <= end && end <= cols_);
  IntMatrix m(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) mpz_neg((*this)(i, j).get_mpz_t(), (*this)(i, j).get_mpz_t());
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) mpz_neg((*this)(i, j).get_mpz_t(), (*this)(i, j).get_mpz_t());
}

void IntMatrix::submul_row(std::size_t dst, std::size_t src, const Integer& factor,
                           std::size_t from_col) {
  if (sgn(factor) == 0) return;
  mpz_srcptr f = factor.get_mpz_t();
  for (std::size_t j = from_col; j < cols_; ++j) {
    mpz_srcptr s = (*this)(src, j).get_mpz_t();
    if (mpz_sgn(s) != 0) mpz_submul((*this)(dst, j).get_mpz_t(), f, s);
  }
}

void IntMatrix::submul_col(std::size_t dst, std::size_t src, const Integer& factor,
                           std::size_t from_row) {
  if (sgn(factor) == 0) return;
  mpz_srcptr f = factor.get_mpz_t();
  for (std::size_t i = from_row; i < rows_; ++i) {
    mpz_srcptr s = (*this)(i, src).get_mpz_t();
    if (mpz_sgn(s) != 0) mpz_submul((*this)(i, dst).get_mpz_t(), f, s);
  }
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw ValidationError("matrix product: " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                          "x" + std::to_string(b.cols()));
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      mpz_srcptr aik = a(i, k).get_mpz_t();
      if (mpz_sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        mpz_addmul(c(i, j).get_mpz_t(), aik, b(k, j).get_mpz_t());
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("matrix sum: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) c.negate_row(i);
  return c;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("hstack: row count mismatch");
  IntMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw ValidationError("vstack: column count mismatch");
  IntMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
  }
  return c;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

}  // namespace etalehom

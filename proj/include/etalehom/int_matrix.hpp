#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace etalehom {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Zero-sized matrices are meaningful (maps out of or into the zero lattice)
/// and keep their shape: a 3x0 matrix is not the same object as a 0x3 one.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& entries, std::size_t rows,
                            std::size_t cols);
  /// Throws ValidationError on ragged input; `cols` fixes the width when
  /// `rows` is empty.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                             std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  IntMatrix transposed() const;
  IntMatrix row_range(std::size_t begin, std::size_t end) const;
  IntMatrix col_range(std::size_t begin, std::size_t end) const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);
  /// row[dst] -= factor * row[src], restricted to columns >= from_col.
  void submul_row(std::size_t dst, std::size_t src, const Integer& factor,
                  std::size_t from_col = 0);
  /// col[dst] -= factor * col[src], restricted to rows >= from_row.
  void submul_col(std::size_t dst, std::size_t src, const Integer& factor,
                  std::size_t from_row = 0);

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);

/// [a | b]
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// [a ; b]
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// diag(a, b)
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

}  // namespace etalehom

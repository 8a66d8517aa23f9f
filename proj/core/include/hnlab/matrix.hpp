#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hnlab/scalar.hpp"

namespace hnlab {

/// Dense row-major matrix over a single exact field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Rejects entries from more than one field or a size mismatch.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_ints(Field field, std::size_t rows, std::size_t cols, std::initializer_list<long> values);
  static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows);
  /// Stacks column vectors side by side; `rows` is needed when `columns` is empty.
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<std::vector<Scalar>>& columns);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<Scalar> column(std::size_t j) const;
  Matrix transpose() const;
  Matrix hconcat(const Matrix& rhs) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  bool is_zero() const;
  Scalar trace() const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& s) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Result of exact Gauss-Jordan elimination.
struct RowReduction {
  Matrix reduced;                   ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
  std::size_t rank = 0;
  Matrix kernel;  ///< cols x (cols - rank); columns span ker(m)
  Matrix image;   ///< rows x rank; the pivot columns of m, spanning its column space
};

RowReduction rref(const Matrix& m);

std::size_t rank(const Matrix& m);
Matrix kernel_basis(const Matrix& m);
Scalar determinant(const Matrix& m);

/// True when the column spans of `a` and `b` coincide, decided by double inclusion.
bool same_column_span(const Matrix& a, const Matrix& b);

}  // namespace hnlab

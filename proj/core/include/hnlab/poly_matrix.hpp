#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hnlab/kt_poly.hpp"
#include "hnlab/matrix.hpp"

namespace hnlab {

/// Dense matrix over k[t].
class PolyMatrix {
 public:
  PolyMatrix(Field field, std::size_t rows, std::size_t cols);
  PolyMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<KtPoly> entries);

  static PolyMatrix identity(Field field, std::size_t n);
  static PolyMatrix diagonal(Field field, const std::vector<KtPoly>& diag);
  /// Entries given as ascending coefficient lists.
  static PolyMatrix from_ints(Field field, const std::vector<std::vector<std::vector<long>>>& rows);
  static PolyMatrix constant(const Matrix& m);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  KtPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const KtPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  PolyMatrix operator*(const PolyMatrix& rhs) const;
  PolyMatrix operator-() const;
  PolyMatrix transpose() const;
  PolyMatrix truncated(std::size_t precision) const;
  /// Reduction modulo t.
  Matrix at_zero() const;
  long max_degree() const;
  bool is_zero() const;

  friend bool operator==(const PolyMatrix& lhs, const PolyMatrix& rhs) = default;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<KtPoly> entries_;
};

/// Kronecker product: (a (x) b)(i*rb + k, j*cb + l) = a(i,j) b(k,l).
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);
/// [top; bottom]
PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom);
/// [left | right]
PolyMatrix hstack(const PolyMatrix& left, const PolyMatrix& right);

/// Nonzero Smith invariant factors d_1 | d_2 | ... | d_r, each monic (units become 1).
std::vector<KtPoly> smith_invariants(const PolyMatrix& m);

/// Rank over the fraction field k(t).
std::size_t rank_over_fractions(const PolyMatrix& m);

/// Exact determinant by fraction-free elimination.
KtPoly determinant(const PolyMatrix& m);

}  // namespace hnlab

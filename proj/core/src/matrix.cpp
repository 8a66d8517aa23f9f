#include "hnlab/matrix.hpp"

#include <sstream>
#include <utility>

namespace hnlab {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(entries.empty() ? Field::rationals() : entries.front().field()),
      rows_(rows),
      cols_(cols),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw InputError("matrix entry count does not match its shape");
  for (const auto& e : entries_)
    if (!(e.field() == field_)) throw InputError("matrix entries from mixed fields");
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols, std::initializer_list<long> values) {
  if (values.size() != rows * cols) throw InputError("matrix entry count does not match its shape");
  Matrix m(field, rows, cols);
  std::size_t k = 0;
  for (long v : values) m.entries_[k++] = field.from_int(v);
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<std::vector<Scalar>>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
      if (!(columns[j][i].field() == field)) throw InputError("matrix entries from mixed fields");
      m(i, j) = columns[j][i];
    }
  }
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::hconcat(const Matrix& rhs) const {
  if (rows_ != rhs.rows_) throw InputError("hconcat: row count mismatch");
  if (!(field_ == rhs.field_)) throw InputError("hconcat: mixed fields");
  Matrix out(field_, rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
  return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw InputError("trace of a non-square matrix");
  Scalar t = field_.zero();
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product: shape mismatch");
  if (!(field_ == rhs.field_)) throw InputError("matrix product: mixed fields");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix sum: shape mismatch");
  Matrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += rhs.entries_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix difference: shape mismatch");
  Matrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= rhs.entries_[k];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& e : out.entries_) e *= s;
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector product: length mismatch");
  std::vector<Scalar> out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.field_ == rhs.field_ && lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.entries_ == rhs.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

RowReduction rref(const Matrix& m) {
  Matrix r = m;
  const Field f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && r(p, col).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
    const Scalar inv = r(row, col).inverse();
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Scalar factor = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= factor * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }

  const std::size_t rk = pivots.size();
  std::vector<bool> is_pivot(r.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  Matrix kernel(f, r.cols(), r.cols() - rk);
  std::size_t k = 0;
  for (std::size_t free = 0; free < r.cols(); ++free) {
    if (is_pivot[free]) continue;
    kernel(free, k) = f.one();
    for (std::size_t i = 0; i < rk; ++i) kernel(pivots[i], k) = -r(i, free);
    ++k;
  }

  Matrix image = m.select_columns(pivots);
  return RowReduction{std::move(r), std::move(pivots), rk, std::move(kernel), std::move(image)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) { return rref(m).kernel; }

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = m.field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) return m.field().zero();
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const Scalar inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Scalar factor = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

bool same_column_span(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return false;
  const std::size_t ra = rank(a);
  const std::size_t rb = rank(b);
  const std::size_t joint = rank(a.hconcat(b));
  return ra == joint && rb == joint;
}

}  // namespace hnlab

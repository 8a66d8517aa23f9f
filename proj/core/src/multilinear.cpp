#include "hnlab/multilinear.hpp"

#include <functional>

namespace hnlab::multilinear {

std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

RankedMap RankedMap::make(const Matrix& f, std::size_t r) {
  if (f.rows() != f.cols()) throw InputError("ranked map must be square");
  const RowReduction red = rref(f);
  if (red.rank != r)
    throw InputError("map has rank " + std::to_string(red.rank) + ", expected " + std::to_string(r));
  Matrix q = kernel_basis(f.transpose()).transpose();
  return RankedMap{f, r, red.kernel, std::move(q)};
}

namespace {

// coefficient of e_J in w_1 ^ ... ^ w_k, columns of `w`
Scalar wedge_coefficient(const Matrix& w, const std::vector<std::size_t>& rows) {
  return determinant(w.select_rows(rows));
}

}  // namespace

Matrix minor_derivative(const Matrix& f, std::size_t r) {
  const std::size_t n = f.rows();
  if (f.cols() != n) throw InputError("minor_derivative: f must be square");
  if (rank(f) != r) throw InputError("minor_derivative: f does not have rank " + std::to_string(r));
  const Field fld = f.field();
  const auto basis = wedge_basis(n, r + 1);
  const std::size_t c = basis.size();
  Matrix out(fld, c * c, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // sigma = E_ab sends e_b to e_a
      for (std::size_t ii = 0; ii < c; ++ii) {
        const auto& in = basis[ii];
        Matrix images = f.select_columns(in);
        for (std::size_t slot = 0; slot < in.size(); ++slot) {
          if (in[slot] != b) continue;
          Matrix w = images;
          for (std::size_t row = 0; row < n; ++row) w(row, slot) = row == a ? fld.one() : fld.zero();
          for (std::size_t jj = 0; jj < c; ++jj) out(jj * c + ii, a * n + b) += wedge_coefficient(w, basis[jj]);
        }
      }
    }
  return out;
}

Matrix restriction_map(const Matrix& q, const Matrix& kernel) {
  const std::size_t n = q.cols();
  const std::size_t u = q.rows(), v = kernel.cols();
  Matrix out(q.field(), u * v, n * n);
  // (q sigma w)_(x,y) = sum_ab q(x,a) sigma(a,b) w(b,y)
  for (std::size_t x = 0; x < u; ++x)
    for (std::size_t y = 0; y < v; ++y)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out(x * v + y, a * n + b) = q(x, a) * kernel(b, y);
  return out;
}

LemmaReport lemma_kernel_check(const Matrix& f, std::size_t r) {
  const RankedMap map = RankedMap::make(f, r);
  return lemma_kernel_check(f, r, map.cokernel_q);
}

LemmaReport lemma_kernel_check(const Matrix& f, std::size_t r, const Matrix& q) {
  const RankedMap map = RankedMap::make(f, r);
  const std::size_t n = f.rows();
  if (q.cols() != n || !(q * f).is_zero() || rank(q) != n - r)
    throw InputError("q is not a cokernel projection for f");
  const Matrix d_ker = kernel_basis(minor_derivative(f, r));
  const Matrix k_ker = kernel_basis(restriction_map(q, map.kernel));
  LemmaReport report;
  report.dim_kernel = d_ker.cols();
  report.dim_K = k_ker.cols();
  report.expected = n * n - (n - r) * (n - r);
  report.holds = same_column_span(d_ker, k_ker) && report.dim_kernel == report.expected;
  return report;
}

TraceWedgeReport trace_wedge_check(const Matrix& alpha, const Matrix& s) {
  const std::size_t big_n = alpha.rows();
  if (alpha.cols() != big_n) throw InputError("trace_wedge_check: alpha must be square");
  if (s.rows() != big_n) throw InputError("trace_wedge_check: vectors do not live in alpha's space");
  const std::size_t n = s.cols();
  if (n > big_n) throw InputError("trace_wedge_check: more vectors than the ambient dimension");
  const auto basis = wedge_basis(big_n, n);
  const Matrix moved = alpha * s;
  const Scalar tr = alpha.trace();

  TraceWedgeReport report;
  for (const auto& rows : basis) {
    Scalar lhs = alpha.field().zero();
    for (std::size_t k = 0; k < n; ++k) {
      Matrix w = s;
      for (std::size_t i = 0; i < big_n; ++i) w(i, k) = moved(i, k);
      lhs += wedge_coefficient(w, rows);
    }
    report.lhs.push_back(lhs);
    report.rhs.push_back(tr * wedge_coefficient(s, rows));
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace hnlab::multilinear

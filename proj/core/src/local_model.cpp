#include "hnlab/local_model.hpp"

#include <algorithm>
#include <numeric>

namespace hnlab::local_model {

MembershipReport check_point_of_Y(const MatrixOverKt& m) {
  const std::size_t n = m.size();
  if (m.entries.cols() != n) throw InputError("local model matrix must be square");
  MembershipReport r{false, 0, false, determinant(m.entries)};
  r.det_ok = !r.determinant.is_zero() && r.determinant.valuation() == m.d;
  r.rank_mod_t = rank(m.entries.at_zero());
  r.member = r.det_ok && m.d <= n && r.rank_mod_t == n - m.d;
  return r;
}

void apply(const RowOp& op, PolyMatrix& m, std::size_t precision) {
  switch (op.kind) {
    case RowOp::Kind::swap:
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(op.target, j), m(op.source, j));
      break;
    case RowOp::Kind::scale:
      for (std::size_t j = 0; j < m.cols(); ++j) m(op.target, j) = (op.factor * m(op.target, j)).truncated(precision);
      break;
    case RowOp::Kind::add_multiple:
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(op.target, j) = (m(op.target, j) + op.factor * m(op.source, j)).truncated(precision);
      break;
  }
}

void apply_inverse(const RowOp& op, PolyMatrix& m, std::size_t precision) {
  switch (op.kind) {
    case RowOp::Kind::swap:
      apply(op, m, precision);
      break;
    case RowOp::Kind::scale:
      apply(RowOp{op.kind, op.target, op.source, series_inverse(op.factor, precision)}, m, precision);
      break;
    case RowOp::Kind::add_multiple:
      apply(RowOp{op.kind, op.target, op.source, -op.factor}, m, precision);
      break;
  }
}

PolyMatrix BlockFactorization::block_form() const {
  const std::size_t k = p.rows();
  const std::size_t n = k + d;
  const Field f = q.field();
  PolyMatrix out(f, n, n);
  for (std::size_t i = 0; i < k; ++i) {
    out(i, i) = KtPoly::constant(f.one());
    for (std::size_t j = 0; j < d; ++j) out(i, k + j) = p(i, j);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(k + i, k + j) = q(i, j).shifted(1).truncated(precision);
  return out;
}

std::size_t working_precision(const MatrixOverKt& m) {
  const std::size_t deg = static_cast<std::size_t>(std::max(0L, m.entries.max_degree()));
  return std::max(2 * deg * m.size(), deg + m.d + 1);
}

namespace {

PolyMatrix permute_columns(const PolyMatrix& m, const std::vector<std::size_t>& order) {
  PolyMatrix out(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, order[j]);
  return out;
}

bool is_permutation(const std::vector<std::size_t>& order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted[i] != i) return false;
  return true;
}

bool chart_condition(const PolyMatrix& m, std::size_t leading) {
  std::vector<std::size_t> cols(leading);
  std::iota(cols.begin(), cols.end(), 0);
  return rank(m.at_zero().select_columns(cols)) == leading;
}

int permutation_sign(std::vector<std::size_t> order) {
  int sign = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    while (order[i] != i) {
      std::swap(order[i], order[order[i]]);
      sign = -sign;
    }
  return sign;
}

}  // namespace

BlockFactorization factor(const MatrixOverKt& m, const std::vector<std::vector<std::size_t>>& column_orders) {
  const std::size_t n = m.size();
  const Field f = m.entries.field();
  if (!check_point_of_Y(m).member) throw InputError("matrix is not a point of the local model");
  const std::size_t k = n - m.d;

  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  candidates.push_back(identity);
  for (const auto& order : column_orders) {
    if (!is_permutation(order, n)) throw InputError("column order is not a permutation");
    candidates.push_back(order);
  }

  const std::size_t precision = working_precision(m);
  for (const auto& order : candidates) {
    PolyMatrix a = permute_columns(m.entries, order);
    if (!chart_condition(a, k)) continue;

    BlockFactorization bf{order, {}, PolyMatrix(f, k, m.d), PolyMatrix(f, m.d, m.d), precision, m.d};
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (a(p, c).coeff(0).is_zero()) ++p;  // exists by the chart condition
      if (p != c) {
        bf.row_ops.push_back(RowOp::swap(c, p, f));
        apply(bf.row_ops.back(), a, precision);
      }
      if (!(a(c, c) == KtPoly::constant(f.one()))) {
        bf.row_ops.push_back({RowOp::Kind::scale, c, c, series_inverse(a(c, c), precision)});
        apply(bf.row_ops.back(), a, precision);
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || a(i, c).is_zero()) continue;
        bf.row_ops.push_back({RowOp::Kind::add_multiple, i, c, -a(i, c)});
        apply(bf.row_ops.back(), a, precision);
      }
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m.d; ++j) bf.p(i, j) = a(i, k + j);
    for (std::size_t i = 0; i < m.d; ++i)
      for (std::size_t j = 0; j < m.d; ++j) {
        const KtPoly& r = a(k + i, k + j);
        if (!r.coeff(0).is_zero()) throw std::logic_error("factor: lower-right block is not divisible by t");
        std::vector<Scalar> shifted(r.coefficients().begin() + (r.is_zero() ? 0 : 1), r.coefficients().end());
        bf.q(i, j) = KtPoly(f, std::move(shifted));
      }
    if (determinant(bf.q).coeff(0).is_zero()) throw std::logic_error("factor: det Q vanishes at t = 0");
    return bf;
  }
  throw ChartError("no supplied column order makes the first " + std::to_string(k) + " columns independent mod t");
}

PolyMatrix reconstruct(const BlockFactorization& bf) {
  PolyMatrix a = bf.block_form();
  for (auto it = bf.row_ops.rbegin(); it != bf.row_ops.rend(); ++it) apply_inverse(*it, a, bf.precision);
  PolyMatrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, bf.column_order[j]) = a(i, j);
  return out;
}

bool determinant_identity_holds(const MatrixOverKt& m, const BlockFactorization& bf) {
  const std::size_t prec = bf.precision;
  KtPoly rhs = determinant(bf.q).shifted(bf.d);
  int sign = permutation_sign(bf.column_order);
  for (const auto& op : bf.row_ops) {
    if (op.kind == RowOp::Kind::swap) sign = -sign;
    if (op.kind == RowOp::Kind::scale) rhs = (rhs * series_inverse(op.factor, prec)).truncated(prec);
  }
  if (sign < 0) rhs = -rhs;
  return determinant(m.entries).truncated(prec) == rhs.truncated(prec);
}

ModificationReport modification_degree_check(const p1::SplitType& e, const p1::FiberSubspace& k) {
  ModificationReport r;
  r.original = e;
  r.modified = p1::modify(e, k);
  r.degree_drop = e.degree() - r.modified.degree();
  r.codim = e.rank() - k.dimension();
  r.balanced = r.degree_drop == static_cast<long>(r.codim) && r.modified.rank() == e.rank();
  return r;
}

}  // namespace hnlab::local_model

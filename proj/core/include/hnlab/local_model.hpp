#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hnlab/p1.hpp"
#include "hnlab/poly_matrix.hpp"

namespace hnlab::local_model {

/// The chart condition (first n-d columns independent mod t) fails for every
/// column order that was tried.
class ChartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n x n matrix over k[t] with expected vanishing order d of the determinant.
struct MatrixOverKt {
  PolyMatrix entries;
  std::size_t d = 0;

  std::size_t size() const noexcept { return entries.rows(); }
};

struct MembershipReport {
  bool det_ok = false;  ///< det = t^d u with u(0) != 0
  std::size_t rank_mod_t = 0;
  bool member = false;
  KtPoly determinant;
};

MembershipReport check_point_of_Y(const MatrixOverKt& m);

/// Elementary row operation over k[[t]]/(t^N).
struct RowOp {
  enum class Kind { swap, scale, add_multiple };
  Kind kind;
  std::size_t target;  ///< row that changes
  std::size_t source;  ///< other row for swap / add_multiple
  KtPoly factor;       ///< unit for scale, multiplier for add_multiple

  static RowOp swap(std::size_t a, std::size_t b, Field f) { return {Kind::swap, a, b, KtPoly(f)}; }
};

void apply(const RowOp& op, PolyMatrix& m, std::size_t precision);
void apply_inverse(const RowOp& op, PolyMatrix& m, std::size_t precision);

/// Row operations taking M (columns permuted) to [[I, P], [0, t Q]] modulo t^precision.
struct BlockFactorization {
  std::vector<std::size_t> column_order;  ///< column j of the reduced matrix is column column_order[j] of M
  std::vector<RowOp> row_ops;
  PolyMatrix p;  ///< (n-d) x d
  PolyMatrix q;  ///< d x d, det Q(0) != 0
  std::size_t precision = 0;
  std::size_t d = 0;

  PolyMatrix block_form() const;
};

/// Working precision: max(2 * deg(M) * n, deg(M) + d + 1).
std::size_t working_precision(const MatrixOverKt& m);

/// Tries the identity column order, then each of `column_orders`.
BlockFactorization factor(const MatrixOverKt& m, const std::vector<std::vector<std::size_t>>& column_orders = {});

/// Undoes the row operations and the column order; equals M exactly.
PolyMatrix reconstruct(const BlockFactorization& bf);

/// det M = sign * t^d det Q / prod(scale units) modulo t^precision.
bool determinant_identity_holds(const MatrixOverKt& m, const BlockFactorization& bf);

struct ModificationReport {
  p1::SplitType original;
  p1::SplitType modified;
  long degree_drop = 0;    ///< deg E - deg E'
  std::size_t codim = 0;   ///< dim(E_fiber / K), the rank of the normal term
  bool balanced = false;
};

ModificationReport modification_degree_check(const p1::SplitType& e, const p1::FiberSubspace& k);

}  // namespace hnlab::local_model

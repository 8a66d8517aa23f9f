#pragma once

#include <cstddef>
#include <vector>

#include "hnlab/matrix.hpp"

namespace hnlab::multilinear {

/// Index sets of size k in {0..n-1}, lexicographic; the wedge basis of Lambda^k.
std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t k);

/// f : V' -> V of rank r with kernel W' and a cokernel projection q : V -> W.
struct RankedMap {
  Matrix f;
  std::size_t r = 0;
  Matrix kernel;      ///< n x (n-r), columns span W' = ker f
  Matrix cokernel_q;  ///< (n-r) x n, q f = 0 and rank q = n - r

  /// Rejects f whose rank differs from r. q is the transposed left kernel of f.
  static RankedMap make(const Matrix& f, std::size_t r);
};

/// Matrix of the derivative of sigma -> Lambda^(r+1) sigma at f, from Hom(V',V)
/// (coordinates sigma(a,b), index a*n + b) to Hom(Lambda^(r+1)V', Lambda^(r+1)V)
/// (row J * C + I for output subset J and input subset I, C = binom(n, r+1)).
Matrix minor_derivative(const Matrix& f, std::size_t r);

/// Matrix of sigma -> q sigma|_W' in the same sigma coordinates.
Matrix restriction_map(const Matrix& q, const Matrix& kernel);

struct LemmaReport {
  bool holds = false;
  std::size_t dim_kernel = 0;  ///< dim ker of the minor derivative
  std::size_t dim_K = 0;       ///< dim of K = ker(Hom(V',V) -> Hom(W',W))
  std::size_t expected = 0;    ///< n^2 - (n-r)^2
};

LemmaReport lemma_kernel_check(const Matrix& f, std::size_t r);
/// Same check with a caller-chosen cokernel projection.
LemmaReport lemma_kernel_check(const Matrix& f, std::size_t r, const Matrix& q);

struct TraceWedgeReport {
  std::vector<Scalar> lhs;  ///< sum_k s_1 ^ ... ^ alpha s_k ^ ... ^ s_n in the wedge basis
  std::vector<Scalar> rhs;  ///< tr(alpha) s_1 ^ ... ^ s_n
  bool equal = false;
};

/// alpha is N x N; vectors are the columns of `s` (N x n). Both sides live in Lambda^n of
/// the N-dimensional space; the identity is expected only for N = n (top exterior power).
TraceWedgeReport trace_wedge_check(const Matrix& alpha, const Matrix& s);

}  // namespace hnlab::multilinear

#pragma once

// Independent reference computations used by the test suites. Nothing here
// calls into the algorithm under test beyond plain field arithmetic.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "hnlab/binary_form.hpp"
#include "hnlab/hn_polygon.hpp"
#include "hnlab/matrix.hpp"
#include "hnlab/p1.hpp"
#include "hnlab/poly_matrix.hpp"
#include "hnlab/random.hpp"

namespace oracle {

using namespace hnlab;

// --- small linear algebra -------------------------------------------------

/// Rank by plain Gaussian elimination on a copy.
inline std::size_t gauss_rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Leibniz expansion; fine for n <= 6.
inline Scalar leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = m.field().zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = m.field().one();
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += (inversions % 2) ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, SplitMix64& rng, long bound = 3) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.scalar(f, bound);
  return m;
}

/// Uniformly drawn product A B with A n x r, B r x n, redrawn until the rank is exactly r.
inline Matrix random_rank_matrix(Field f, std::size_t n, std::size_t r, SplitMix64& rng, long bound = 3) {
  for (;;) {
    Matrix m = random_matrix(f, n, r, rng, bound) * random_matrix(f, r, n, rng, bound);
    if (r == 0) return Matrix(f, n, n);
    if (gauss_rank(m) == r) return m;
  }
}

// --- k[t] -----------------------------------------------------------------

inline KtPoly random_kt(Field f, long max_degree, SplitMix64& rng, long bound = 3) {
  std::vector<Scalar> c;
  const long deg = rng.between(0, max_degree);
  for (long i = 0; i <= deg; ++i) c.push_back(rng.scalar(f, bound));
  return KtPoly(f, std::move(c));
}

inline PolyMatrix random_poly_matrix(Field f, std::size_t rows, std::size_t cols, long max_degree, SplitMix64& rng) {
  PolyMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_kt(f, max_degree, rng);
  return m;
}

/// Product of random elementary matrices over k[t]; determinant is a nonzero constant.
inline PolyMatrix random_unimodular(Field f, std::size_t n, SplitMix64& rng, int steps = 6) {
  PolyMatrix u = PolyMatrix::identity(f, n);
  if (n == 0) return u;
  for (int s = 0; s < steps; ++s) {
    PolyMatrix e = PolyMatrix::identity(f, n);
    const std::size_t i = rng.below(n), j = rng.below(n);
    if (i == j) {
      e(i, i) = KtPoly::constant(rng.nonzero_scalar(f, 3));
    } else {
      e(i, j) = random_kt(f, 2, rng);
    }
    u = u * e;
  }
  return u;
}

/// k x k minors of m, all subsets.
inline std::vector<KtPoly> minors(const PolyMatrix& m, std::size_t k) {
  std::vector<KtPoly> out;
  std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
  std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
  do {
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
    do {
      PolyMatrix sub(m.field(), k, k);
      std::size_t a = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!rsel[i]) continue;
        std::size_t b = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (csel[j]) sub(a, b++) = m(i, j);
        ++a;
      }
      out.push_back(determinant(sub));
    } while (std::prev_permutation(csel.begin(), csel.end()));
  } while (std::prev_permutation(rsel.begin(), rsel.end()));
  return out;
}

/// Invariant factors from determinantal divisors: D_k = gcd of k x k minors, d_k = D_k / D_{k-1}.
inline std::vector<KtPoly> invariants_from_minors(const PolyMatrix& m) {
  std::vector<KtPoly> out;
  KtPoly prev = KtPoly::constant(m.field().one());
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    KtPoly g(m.field());
    for (const auto& x : minors(m, k)) g = gcd(g, x);
    if (g.is_zero()) break;
    out.push_back((g / prev).monic());
    prev = g;
  }
  return out;
}

// --- P^1 ------------------------------------------------------------------

/// Splitting type read from h0 values on a wide fixed window.
inline p1::SplitType split_from_h0(const std::function<std::size_t(long)>& h0, long lo = -40, long hi = 40) {
  std::vector<long> twists;
  long prev_delta = 0;
  for (long m = lo; m <= hi; ++m) {
    const long delta = static_cast<long>(h0(m)) - static_cast<long>(h0(m - 1));
    for (long c = 0; c < delta - prev_delta; ++c) twists.push_back(-m);
    prev_delta = delta;
  }
  return p1::SplitType(std::move(twists));
}

inline std::size_t h0_sum(const std::vector<long>& twists, long m) {
  std::size_t s = 0;
  for (long c : twists) s += static_cast<std::size_t>(std::max(0L, c + m + 1));
  return s;
}

/// Matrix of H^0(phi(m)): columns are monomial sections x^(a_i+m-k) y^k e_i,
/// rows are coefficients of the image in the target summands.
inline Matrix global_sections_matrix(const p1::GradedMap& phi, long m) {
  const Field f = phi.field();
  std::vector<std::pair<std::size_t, long>> cols;  // (summand, k)
  for (std::size_t i = 0; i < phi.source().size(); ++i)
    for (long k = 0; k <= phi.source()[i] + m; ++k) cols.push_back({i, k});
  std::vector<std::size_t> row_offset;
  std::size_t rows = 0;
  for (long b : phi.target()) {
    row_offset.push_back(rows);
    rows += static_cast<std::size_t>(std::max(0L, b + m + 1));
  }
  Matrix out(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto [i, k] = cols[c];
    const BinaryForm section = BinaryForm::monomial(f.one(), phi.source()[i] + m, k);
    for (std::size_t j = 0; j < phi.target().size(); ++j) {
      const BinaryForm& e = phi.entry(j, i);
      if (e.is_zero()) continue;
      const BinaryForm img = multiply(e, section);
      for (long r = 0; r <= img.degree(); ++r) out(row_offset[j] + static_cast<std::size_t>(r), c) += img.coeff(r);
    }
  }
  return out;
}

inline std::size_t kernel_h0(const p1::GradedMap& phi, long m) {
  const Matrix a = global_sections_matrix(phi, m);
  return a.cols() - gauss_rank(a);
}

/// h0 of the modification of (+)O(c_l) at `point` by K (columns of `basis`):
/// sections whose value at the point lies in K.
inline std::size_t modified_h0(const std::vector<long>& twists, const Scalar& x0, const Scalar& y0, const Matrix& basis, long m) {
  const Field f = x0.field();
  const std::size_t r = twists.size();
  // value map: sections -> fiber, each monomial x^(c+m-k) y^k evaluated at (x0, y0)
  std::vector<std::vector<Scalar>> value_columns;
  for (std::size_t l = 0; l < r; ++l)
    for (long k = 0; k <= twists[l] + m; ++k) {
      std::vector<Scalar> v(r, f.zero());
      v[l] = BinaryForm::monomial(f.one(), twists[l] + m, k).evaluate(x0, y0);
      value_columns.push_back(v);
    }
  const std::size_t total = value_columns.size();
  if (total == 0) return 0;
  // condition: value in K  <=>  value annihilated by every functional vanishing on K
  const Matrix ann = kernel_basis(basis.transpose()).transpose();
  const Matrix values = Matrix::from_columns(f, r, value_columns);
  const Matrix cond = ann * values;
  return total - gauss_rank(cond);
}

// --- HN types ---------------------------------------------------------------

/// Brute force over compositions: partitions of `rank` into parts h, each part
/// independently given a degree d in [h * smin, h * smax] with gcd(d, h) = 1
/// (equal parts take non-increasing degrees so each multiset appears once).
/// Every resulting multiset is bucketed by total degree, each bucket sorted
/// descending on its (slope, multiplicity) lists.
inline std::map<long, std::vector<hn::HNType>> brute_force_profiles_by_degree(std::size_t rank, hn::Slope smin, hn::Slope smax) {
  std::map<long, std::set<std::vector<std::pair<long, long>>>> seen;  // degree -> sorted (h, d) parts
  std::vector<long> parts;
  std::vector<std::pair<long, long>> assigned;

  auto floor_div = [](long a, long b) { long q = a / b; if ((a % b) && ((a < 0) != (b < 0))) --q; return q; };
  auto ceil_div = [&](long a, long b) { return -floor_div(-a, b); };

  std::function<void(std::size_t, long)> assign = [&](std::size_t idx, long deg) {
    if (idx == parts.size()) {
      auto key = assigned;
      std::sort(key.begin(), key.end());
      seen[deg].insert(key);
      return;
    }
    const long h = parts[idx];
    long top = floor_div(smax.num() * h, smax.den());
    if (idx > 0 && parts[idx - 1] == h) top = std::min(top, assigned.back().second);
    for (long d = ceil_div(smin.num() * h, smin.den()); d <= top; ++d) {
      if (std::gcd(d, h) != 1) continue;
      assigned.push_back({h, d});
      assign(idx + 1, deg + d);
      assigned.pop_back();
    }
  };
  std::function<void(long, long)> partition = [&](long left, long max_part) {
    if (left == 0) {
      assign(0, 0);
      return;
    }
    for (long h = std::min(left, max_part); h >= 1; --h) {
      parts.push_back(h);
      partition(left - h, h);
      parts.pop_back();
    }
  };
  if (!(smax < smin)) partition(static_cast<long>(rank), static_cast<long>(rank));

  std::map<long, std::vector<hn::HNType>> out;
  for (const auto& [deg, keys] : seen) {
    auto& bucket = out[deg];
    for (const auto& key : keys) {
      hn::HNType t;
      for (const auto& [h, d] : key) t.add(hn::Slope(d, h), 1);
      bucket.push_back(t);
    }
    std::sort(bucket.begin(), bucket.end(), [](const hn::HNType& a, const hn::HNType& b) {
      const auto sa = a.summands(), sb = b.summands();
      return std::lexicographical_compare(sb.begin(), sb.end(), sa.begin(), sa.end());
    });
  }
  return out;
}

inline std::vector<hn::HNType> brute_force_profiles(std::size_t rank, long degree, hn::Slope smin, hn::Slope smax) {
  auto all = brute_force_profiles_by_degree(rank, smin, smax);
  auto it = all.find(degree);
  return it == all.end() ? std::vector<hn::HNType>{} : it->second;
}

/// Reduced fractions p/q in [lo, hi] with q <= max_den, ascending.
inline std::vector<hn::Slope> farey_range(long lo, long hi, long max_den) {
  std::set<hn::Slope> s;
  for (long q = 1; q <= max_den; ++q)
    for (long p = lo * q; p <= hi * q; ++p) s.insert(hn::Slope(p, q));
  return {s.begin(), s.end()};
}

/// Random HN type with up to `parts` stable summands, denominators <= max_den, |slope| <= 2.
inline hn::HNType random_hn(SplitMix64& rng, int parts = 3, long max_den = 4) {
  hn::HNType t;
  const int k = static_cast<int>(rng.between(1, parts));
  for (int i = 0; i < k; ++i) {
    const long h = rng.between(1, max_den);
    t.add(hn::Slope(rng.between(-2 * h, 2 * h), h), static_cast<std::size_t>(rng.between(1, 2)));
  }
  return t;
}

}  // namespace oracle

namespace oracle {

/// Inclusion U * D * V with D carrying t^e_i on its diagonal (e_i in [0, max_exp]), U, V unimodular.
/// With t_power false the diagonal holds arbitrary nonzero polynomials of degree <= max_exp and
/// `exponents` is left empty.
struct TorsionPresentation {
  hnlab::PolyMatrix inclusion;
  std::vector<long> exponents;  ///< t-exponents of the diagonal of D
  std::size_t free_rank = 0;    ///< rank A - rank K
};

inline TorsionPresentation random_presentation(hnlab::Field f, std::size_t max_size, long max_exp, hnlab::SplitMix64& rng,
                                               bool t_power = true) {
  using namespace hnlab;
  const std::size_t a = rng.between(1, static_cast<long>(max_size));
  const std::size_t k = rng.between(0, static_cast<long>(a));
  PolyMatrix d(f, a, k);
  TorsionPresentation out{PolyMatrix(f, a, k), {}, a - k};
  for (std::size_t i = 0; i < k; ++i) {
    if (!t_power) {
      KtPoly p(f);
      while (p.is_zero()) p = random_kt(f, max_exp, rng);
      d(i, i) = p;
      continue;
    }
    const long e = rng.between(0, max_exp);
    out.exponents.push_back(e);
    d(i, i) = KtPoly::monomial(rng.nonzero_scalar(f, 3), static_cast<std::size_t>(e));
  }
  out.inclusion = random_unimodular(f, a, rng) * d * random_unimodular(f, k, rng);
  return out;
}

/// Length of torsion of B (x) B' and of Tor_1(B, B') for B = k[t]^f (+) (+) k[t]/t^e.
struct ExpectedLengths {
  std::size_t tensor_free = 0;
  std::size_t tensor_length = 0;
  std::size_t tor_length = 0;
};

inline ExpectedLengths expected_lengths(const TorsionPresentation& a, const TorsionPresentation& b) {
  ExpectedLengths out;
  out.tensor_free = a.free_rank * b.free_rank;
  std::size_t len_a = 0, len_b = 0;
  for (long e : a.exponents) len_a += static_cast<std::size_t>(e);
  for (long e : b.exponents) len_b += static_cast<std::size_t>(e);
  for (long e : a.exponents)
    for (long e2 : b.exponents) out.tor_length += static_cast<std::size_t>(std::min(e, e2));
  out.tensor_length = out.tor_length + a.free_rank * len_b + b.free_rank * len_a;
  return out;
}

}  // namespace oracle

namespace oracle {

/// Random n x n member of the local model with vanishing order d:
/// U * diag(I, t W) * V with U, V unimodular, W(0) invertible, entries of degree <= max_degree.
inline hnlab::PolyMatrix random_member(hnlab::Field f, std::size_t n, std::size_t d, long max_degree, hnlab::SplitMix64& rng) {
  using namespace hnlab;
  for (;;) {
    PolyMatrix mid = PolyMatrix::identity(f, n);
    const Matrix w0 = random_rank_matrix(f, d, d, rng);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        KtPoly w = KtPoly::constant(w0(i, j));
        if (rng.below(2)) w += KtPoly::monomial(rng.scalar(f, 2), 1);
        mid(n - d + i, n - d + j) = w.shifted(1);
      }
    const PolyMatrix m = random_unimodular(f, n, rng, 2) * mid * random_unimodular(f, n, rng, 2);
    if (m.max_degree() <= max_degree) return m;
  }
}

/// Invertible over k[[t]] (unit determinant at t = 0) but generally not over k[t].
inline hnlab::PolyMatrix random_local_unit(hnlab::Field f, std::size_t n, hnlab::SplitMix64& rng) {
  using namespace hnlab;
  const Matrix c = random_rank_matrix(f, n, n, rng);
  PolyMatrix out(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = KtPoly::constant(c(i, j)) + KtPoly::monomial(rng.scalar(f, 2), 1);
  return out;
}

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace oracle

#include "doctest.h"
#include "oracles.hpp"

#include "hnlab/multilinear.hpp"

using namespace hnlab;
using namespace hnlab::multilinear;

namespace {
const Field Q = Field::rationals();
const Field F101 = Field::prime(101);

Matrix invertible(Field f, std::size_t n, SplitMix64& rng) { return oracle::random_rank_matrix(f, n, n, rng); }
}  // namespace

TEST_CASE("wedge basis is lexicographic") {
  const auto b = wedge_basis(4, 2);
  REQUIRE(b.size() == 6);
  CHECK(b.front() == std::vector<std::size_t>{0, 1});
  CHECK(b[2] == std::vector<std::size_t>{0, 3});
  CHECK(b.back() == std::vector<std::size_t>{2, 3});
  CHECK(wedge_basis(3, 4).empty());
  CHECK(wedge_basis(3, 0).size() == 1);
}

TEST_CASE("minor derivative by hand") {
  SUBCASE("E11 in dimension two") {
    // D(sigma)(e1^e2) = f(e1)^sigma(e2) + sigma(e1)^f(e2) = sigma_22 e1^e2
    const Matrix d = minor_derivative(Matrix::from_ints(Q, 2, 2, {1, 0, 0, 0}), 1);
    CHECK(d == Matrix::from_ints(Q, 1, 4, {0, 0, 0, 1}));
  }
  SUBCASE("zero map, first exterior power is the identity") {
    CHECK(minor_derivative(Matrix(Q, 3, 3), 0) == Matrix::identity(Q, 9));
  }
  SUBCASE("invertible map, empty target") {
    const Matrix d = minor_derivative(Matrix::identity(Q, 3), 3);
    CHECK(d.rows() == 0);
    CHECK(d.cols() == 9);
  }
  SUBCASE("rank mismatch") { CHECK_THROWS_AS(minor_derivative(Matrix::identity(Q, 2), 1), InputError); }
}

TEST_CASE("minor derivative is the derivative of the minor map") {
  // Lambda^(r+1)(f + eps sigma) = eps D(sigma) + O(eps^2) since Lambda^(r+1) f = 0
  SplitMix64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng.between(2, 4), r = rng.between(0, static_cast<long>(n) - 1);
    const Matrix f = oracle::random_rank_matrix(Q, n, r, rng);
    const Matrix sigma = oracle::random_matrix(Q, n, n, rng);
    const Matrix d = minor_derivative(f, r);
    std::vector<Scalar> s(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) s[a * n + b] = sigma(a, b);
    const std::vector<Scalar> lin = d.apply(s);
    const auto basis = wedge_basis(n, r + 1);
    const std::size_t c = basis.size();
    auto minors_at = [&](const Scalar& eps) {
      const Matrix g = f + sigma.scaled(eps);
      std::vector<Scalar> out(c * c, Q.zero());
      for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < c; ++i) out[j * c + i] = oracle::leibniz_det(g.select_rows(basis[j]).select_columns(basis[i]));
      return out;
    };
    // minors are polynomials in eps of degree <= r+1 vanishing at 0; read off the linear coefficient
    // by interpolating at eps = 1..r+1.
    std::vector<std::vector<Scalar>> values;
    for (std::size_t k = 1; k <= r + 1; ++k) values.push_back(minors_at(Q.from_int(static_cast<long>(k))));
    // Lagrange basis on nodes 0..r+1: l_k'(0) = (1/k) prod_{m != 0,k} (-m)/(k-m)
    std::vector<Scalar> weight;
    for (long k = 1; k <= static_cast<long>(r) + 1; ++k) {
      Scalar w = Q.from_fraction(1, k);
      for (long m = 1; m <= static_cast<long>(r) + 1; ++m)
        if (m != k) w *= Q.from_fraction(-m, k - m);
      weight.push_back(w);
    }
    for (std::size_t idx = 0; idx < c * c; ++idx) {
      Scalar deriv = Q.zero();
      for (std::size_t k = 0; k <= r; ++k) deriv += weight[k] * values[k][idx];
      CHECK(deriv == lin[idx]);
    }
  }
}

TEST_CASE("lemma examples") {
  const LemmaReport a = lemma_kernel_check(Matrix::from_ints(Q, 2, 2, {1, 0, 0, 0}), 1);
  CHECK(a.holds);
  CHECK(a.dim_kernel == 3);
  CHECK(a.dim_K == 3);
  const LemmaReport b = lemma_kernel_check(Matrix::identity(Q, 4), 4);
  CHECK(b.holds);
  CHECK(b.dim_kernel == 16);
  CHECK(b.dim_K == 16);
}

TEST_CASE("lemma holds on random maps of every rank") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    const Field f = trial % 2 ? Q : F101;
    const std::size_t n = rng.between(1, 4), r = rng.between(0, static_cast<long>(n));
    const LemmaReport rep = lemma_kernel_check(oracle::random_rank_matrix(f, n, r, rng), r);
    CHECK(rep.holds);
    CHECK(rep.dim_kernel == n * n - (n - r) * (n - r));
  }
}

TEST_CASE("K does not depend on the cokernel projection") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Field f = trial % 2 ? Q : F101;
    const std::size_t n = rng.between(2, 5), r = rng.between(0, static_cast<long>(n) - 1);
    const Matrix m = oracle::random_rank_matrix(f, n, r, rng);
    const RankedMap base = RankedMap::make(m, r);
    const Matrix alt = invertible(f, n - r, rng) * base.cokernel_q;
    const LemmaReport rep = lemma_kernel_check(m, r, alt);
    CHECK(rep.holds);
    const Matrix k1 = kernel_basis(restriction_map(base.cokernel_q, base.kernel));
    const Matrix k2 = kernel_basis(restriction_map(alt, base.kernel));
    CHECK(same_column_span(k1, k2));
  }
  const Matrix m = Matrix::from_ints(Q, 2, 2, {1, 0, 0, 0});
  CHECK_THROWS_AS(lemma_kernel_check(m, 1, Matrix::from_ints(Q, 1, 2, {1, 0})), InputError);
}

TEST_CASE("trace wedge identity") {
  SUBCASE("identity endomorphism") {
    const Matrix s = Matrix::from_ints(Q, 2, 2, {1, 0, 2, 5});
    const TraceWedgeReport r = trace_wedge_check(Matrix::identity(Q, 2), s);
    CHECK(r.equal);
    REQUIRE(r.lhs.size() == 1);
    CHECK(r.lhs[0] == Q.from_int(10));  // 2 * det s
    CHECK(r.rhs[0] == Q.from_int(10));
  }
  SUBCASE("strictly upper triangular") {
    SplitMix64 rng(44);
    Matrix alpha = oracle::random_matrix(Q, 4, 4, rng);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j <= i; ++j) alpha(i, j) = Q.zero();
    const Matrix s = oracle::random_matrix(Q, 4, 4, rng);
    const TraceWedgeReport r = trace_wedge_check(alpha, s);
    CHECK(r.equal);
    for (const auto& v : r.rhs) CHECK(v.is_zero());
    for (const auto& v : r.lhs) CHECK(v.is_zero());
  }
  SUBCASE("only the top exterior power carries the trace") {
    // in Lambda^1 of a 2-dimensional space the left side is just alpha s, not tr(alpha) s
    const TraceWedgeReport r = trace_wedge_check(Matrix::identity(Q, 2), Matrix::from_ints(Q, 2, 1, {1, 0}));
    CHECK_FALSE(r.equal);
  }
  SUBCASE("random against minors") {
    SplitMix64 rng(45);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = rng.between(1, 5), big = n;
      const Matrix alpha = oracle::random_matrix(Q, big, big, rng);
      const Matrix s = oracle::random_matrix(Q, big, n, rng);
      const TraceWedgeReport r = trace_wedge_check(alpha, s);
      CHECK(r.equal);
      const auto basis = wedge_basis(big, n);
      REQUIRE(r.rhs.size() == basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i)
        CHECK(r.rhs[i] == alpha.trace() * oracle::leibniz_det(s.select_rows(basis[i])));
    }
  }
}

#include "doctest.h"
#include "oracles.hpp"

#include "hnlab/local_model.hpp"

using namespace hnlab;
using namespace hnlab::local_model;

namespace {
const Field Q = Field::rationals();
const Field F101 = Field::prime(101);
MatrixOverKt mk(std::vector<std::vector<std::vector<long>>> rows, std::size_t d) {
  return MatrixOverKt{PolyMatrix::from_ints(Q, rows), d};
}
}  // namespace

TEST_CASE("membership examples") {
  const MembershipReport a = check_point_of_Y(mk({{{1}, {}}, {{}, {0, 1}}}, 1));
  CHECK(a.member);
  CHECK(a.rank_mod_t == 1);
  const MembershipReport b = check_point_of_Y(mk({{{0, 1}, {}}, {{}, {0, 1}}}, 1));
  CHECK_FALSE(b.det_ok);
  CHECK_FALSE(b.member);
  const MembershipReport c = check_point_of_Y(mk({{{1}, {1}}, {{1}, {1, 1}}}, 1));
  CHECK(c.determinant == KtPoly::from_ints(Q, {0, 1}));
  CHECK(c.rank_mod_t == 1);
  CHECK(c.member);
  CHECK_THROWS_AS(check_point_of_Y(MatrixOverKt{PolyMatrix(Q, 2, 3), 1}), InputError);
}

TEST_CASE("factor examples") {
  SUBCASE("diagonal") {
    const BlockFactorization bf = factor(mk({{{1}, {}}, {{}, {0, 1}}}, 1));
    CHECK(bf.p.is_zero());
    CHECK(bf.q == PolyMatrix::from_ints(Q, {{{1}}}));
  }
  SUBCASE("one row operation") {
    const MatrixOverKt m = mk({{{1}, {1}}, {{1}, {1, 1}}}, 1);
    const BlockFactorization bf = factor(m);
    CHECK(bf.row_ops.size() == 1);
    CHECK(bf.block_form() == PolyMatrix::from_ints(Q, {{{1}, {1}}, {{}, {0, 1}}}));
    CHECK(bf.p == PolyMatrix::from_ints(Q, {{{1}}}));
    CHECK(bf.q == PolyMatrix::from_ints(Q, {{{1}}}));
    CHECK(reconstruct(bf) == m.entries);
  }
  SUBCASE("chart failure") {
    const MatrixOverKt m = mk({{{0, 1}, {1}}, {{}, {1}}}, 1);
    REQUIRE(check_point_of_Y(m).member);
    CHECK_THROWS_AS(factor(m), ChartError);
    const BlockFactorization bf = factor(m, {{1, 0}});
    CHECK(bf.column_order == std::vector<std::size_t>{1, 0});
    CHECK(reconstruct(bf) == m.entries);
    CHECK(determinant_identity_holds(m, bf));
  }
  SUBCASE("non-members are refused") { CHECK_THROWS_AS(factor(mk({{{0, 1}, {}}, {{}, {0, 1}}}, 1)), InputError); }
  SUBCASE("bad permutation") {
    CHECK_THROWS_AS(factor(mk({{{1}, {}}, {{}, {0, 1}}}, 1), {{0, 0}}), InputError);
  }
}

TEST_CASE("round trip and determinant identity on random members") {
  SplitMix64 rng(61);
  for (int trial = 0; trial < 80; ++trial) {
    const Field f = trial % 2 ? Q : F101;
    const std::size_t n = rng.between(1, 4), d = rng.between(0, static_cast<long>(n));
    const MatrixOverKt m{oracle::random_member(f, n, d, 3, rng), d};
    REQUIRE(check_point_of_Y(m).member);
    const BlockFactorization bf = factor(m, oracle::all_permutations(n));
    CHECK(reconstruct(bf) == m.entries);
    CHECK_FALSE(determinant(bf.q).coeff(0).is_zero());
    CHECK(determinant_identity_holds(m, bf));
    CHECK(bf.precision > static_cast<std::size_t>(m.entries.max_degree()));
  }
}

TEST_CASE("membership is invariant under local units") {
  SplitMix64 rng(62);
  int members = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Field f = trial % 2 ? Q : F101;
    const std::size_t n = rng.between(1, 3), d = rng.between(0, static_cast<long>(n));
    const PolyMatrix base = trial % 3 == 0 ? oracle::random_poly_matrix(f, n, n, 2, rng)
                                           : oracle::random_member(f, n, d, 3, rng);
    const MatrixOverKt m{base, d};
    const MatrixOverKt moved{oracle::random_local_unit(f, n, rng) * base * oracle::random_local_unit(f, n, rng), d};
    const bool member = check_point_of_Y(m).member;
    members += member;
    CHECK(check_point_of_Y(moved).member == member);
  }
  CHECK(members > 30);
}

TEST_CASE("modification degree bookkeeping") {
  const Field f = Q;
  const auto at_inf = p1::ProjectivePoint::infinity(f);
  const ModificationReport a = modification_degree_check(p1::SplitType{0, 0}, p1::FiberSubspace(at_inf, Matrix::from_ints(f, 2, 1, {1, 0})));
  CHECK(a.balanced);
  CHECK(a.degree_drop == 1);
  CHECK(a.codim == 1);
  const ModificationReport b = modification_degree_check(p1::SplitType{2, 1, 0}, p1::FiberSubspace(at_inf, Matrix(f, 3, 0)));
  CHECK(b.balanced);
  CHECK(b.degree_drop == 3);
  const ModificationReport c =
      modification_degree_check(p1::SplitType{1, 1, 1}, p1::FiberSubspace(at_inf, Matrix::from_ints(f, 3, 2, {1, 0, 0, 1, 0, 0})));
  CHECK(c.modified.degree() == 2);
  CHECK(c.balanced);
}

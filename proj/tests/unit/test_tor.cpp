#include "doctest.h"
#include "oracles.hpp"

#include "hnlab/tor.hpp"

using namespace hnlab;
using namespace hnlab::tor;

namespace {
const Field Q = Field::rationals();
KtPoly tp(std::size_t e) { return KtPoly::monomial(Q.one(), e); }
KtModule cyclic(std::size_t e) { return KtModule(Q, 0, {tp(e)}); }
}  // namespace

TEST_CASE("modules normalize to invariant factors") {
  const KtModule m(Q, 1, {tp(2), KtPoly::from_ints(Q, {1, 1}), KtPoly::from_ints(Q, {3}), KtPoly(Q)});
  CHECK(m.free_rank() == 2);
  REQUIRE(m.torsion().size() == 1);
  CHECK(m.torsion()[0] == KtPoly::from_ints(Q, {0, 0, 1, 1}));
  CHECK(m.torsion_length() == 3);
  CHECK(KtModule(Q, 0, {tp(1), tp(1)}).torsion().size() == 2);
  CHECK(KtModule::cokernel(PolyMatrix::from_ints(Q, {{{0, 1}, {1}}, {{}, {0, 1}}})) == cyclic(2));
}

TEST_CASE("tor and tensor of cyclic modules") {
  CHECK(tor1(cyclic(1), cyclic(1)) == cyclic(1));
  CHECK(tor1(KtModule(Q, 2), cyclic(3)).is_zero());
  CHECK(tor1(cyclic(2), cyclic(3)) == cyclic(2));
  CHECK(tensor_modules(cyclic(2), cyclic(3)) == cyclic(2));
  CHECK(tensor_modules(KtModule(Q, 1), cyclic(3)) == cyclic(3));
  CHECK(tensor_modules(KtModule(Q, 2), KtModule(Q, 3)) == KtModule(Q, 6));
}

TEST_CASE("homology of the tensor complex, worked cases") {
  SUBCASE("K = A") {
    const HomologyReport r = complex_homology_check(PresentedSES(PolyMatrix::identity(Q, 2)),
                                                    PresentedSES(PolyMatrix::from_ints(Q, {{{0, 1}}})));
    CHECK(r.passed());
    CHECK(r.homology.h1.is_zero());
    CHECK(r.homology.h0.is_zero());
  }
  SUBCASE("multiplication by t on both sides") {
    const PresentedSES s(PolyMatrix::from_ints(Q, {{{0, 1}}}));
    const HomologyReport r = complex_homology_check(s, s);
    CHECK(r.passed());
    CHECK(r.homology.h2.is_zero());
    CHECK(r.homology.h1 == cyclic(1));
    CHECK(r.homology.h0 == cyclic(1));
  }
  SUBCASE("diag(t^2, t^3) against t") {
    const PresentedSES s1(PolyMatrix::diagonal(Q, {tp(2), tp(3)}));
    const PresentedSES s2(PolyMatrix::from_ints(Q, {{{0, 1}}}));
    const HomologyReport r = complex_homology_check(s1, s2);
    CHECK(r.passed());
    CHECK(r.homology.h1 == KtModule(Q, 0, {tp(1), tp(1)}));
  }
  SUBCASE("non-injective inclusion rejected") {
    CHECK_THROWS_AS(PresentedSES(PolyMatrix::from_ints(Q, {{{1}, {1}}})), InputError);
  }
}

TEST_CASE("complex shape") {
  const PresentedSES s1(PolyMatrix::diagonal(Q, {tp(1), tp(2)}));
  const PresentedSES s2(PolyMatrix::from_ints(Q, {{{0, 1}}, {{1}}}));
  const TensorComplex c = tensor_complex(s1, s2);
  CHECK(c.d2.rows() == 2 * 1 + 2 * 2);
  CHECK(c.d2.cols() == 2 * 1);
  CHECK(c.d1.rows() == 2 * 2);
  CHECK(c.d1.cols() == c.d2.rows());
  CHECK((c.d1 * c.d2).is_zero());
}

TEST_CASE("random presentations: homology matches Tor and tensor, and is symmetric") {
  SplitMix64 rng(51);
  for (int trial = 0; trial < 80; ++trial) {
    const Field f = trial % 2 ? Q : Field::prime(101);
    const auto a = oracle::random_presentation(f, 3, 4, rng);
    const auto b = oracle::random_presentation(f, 3, 4, rng);
    const PresentedSES s1(a.inclusion), s2(b.inclusion);
    const HomologyReport r = complex_homology_check(s1, s2);
    CHECK(r.passed());
    const auto expect = oracle::expected_lengths(a, b);
    CHECK(r.homology.h1.free_rank() == 0);
    CHECK(r.homology.h1.torsion_length() == expect.tor_length);
    CHECK(r.homology.h0.free_rank() == expect.tensor_free);
    CHECK(r.homology.h0.torsion_length() == expect.tensor_length);
    const HomologyReport swapped = complex_homology_check(s2, s1);
    CHECK(swapped.homology.h2 == r.homology.h2);
    CHECK(swapped.homology.h1 == r.homology.h1);
    CHECK(swapped.homology.h0 == r.homology.h0);
  }
}

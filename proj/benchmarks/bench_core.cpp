#include <benchmark/benchmark.h>

#include "hnlab/hn_polygon.hpp"
#include "hnlab/multilinear.hpp"
#include "hnlab/p1.hpp"
#include "hnlab/poly_matrix.hpp"
#include "hnlab/random.hpp"
#include "hnlab/rz.hpp"

using namespace hnlab;

namespace {

Matrix rank_r(Field f, std::size_t n, std::size_t r, SplitMix64& rng) {
  Matrix a(f, n, r), b(f, r, n);
  for (auto* m : {&a, &b})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j) (*m)(i, j) = rng.scalar(f, 3);
  return a * b;
}

PolyMatrix random_poly_matrix(Field f, std::size_t rows, std::size_t cols, long degree, SplitMix64& rng) {
  PolyMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Scalar> c;
      for (long k = 0; k <= degree; ++k) c.push_back(rng.scalar(f, 3));
      m(i, j) = KtPoly(f, std::move(c));
    }
  return m;
}

}  // namespace

static void BM_EnumerateProfiles(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(rz::enumerate_profiles(rank, static_cast<long>(rank) / 3, hn::Slope(0), hn::Slope(1, 2)));
}
BENCHMARK(BM_EnumerateProfiles)->Arg(8)->Arg(15)->Arg(24)->Arg(35);

static void BM_Tensor(benchmark::State& state) {
  const hn::HNType a{{hn::Slope(1, 3), 2}, {hn::Slope(0), 1}, {hn::Slope(-2, 5), 1}};
  const hn::HNType b{{hn::Slope(1, 4), 1}, {hn::Slope(-1, 2), 3}};
  for (auto _ : state) benchmark::DoNotOptimize(hn::tensor(a, b));
}
BENCHMARK(BM_Tensor);

static void BM_Jacobian(benchmark::State& state) {
  const Field f = state.range(0) ? Field::prime(101) : Field::rationals();
  SplitMix64 rng(0);
  const MultiPoly p = p1::random_homogeneous(f, 3, 4, rng, 1);
  std::vector<BinaryForm> g;
  for (int i = 0; i < 3; ++i) g.push_back(p1::random_form(f, 1, rng, 1));
  for (auto _ : state) benchmark::DoNotOptimize(p1::jacobian_analysis(p, g));
}
BENCHMARK(BM_Jacobian)->Arg(0)->Arg(1);

static void BM_MinorLemma(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  SplitMix64 rng(1);
  const Matrix f = rank_r(Field::rationals(), n, n / 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(multilinear::lemma_kernel_check(f, n / 2));
}
BENCHMARK(BM_MinorLemma)->DenseRange(2, 5);

static void BM_SmithInvariants(benchmark::State& state) {
  const Field f = state.range(1) ? Field::prime(101) : Field::rationals();
  const auto n = static_cast<std::size_t>(state.range(0));
  SplitMix64 rng(2);
  const PolyMatrix m = random_poly_matrix(f, n, n, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(m));
}
BENCHMARK(BM_SmithInvariants)->ArgsProduct({{2, 4, 6}, {0, 1}});
BENCHMARK_MAIN();

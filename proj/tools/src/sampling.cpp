#include "sampling.hpp"

namespace hnlab::cli {

namespace {

constexpr long coefficient_bound = 3;

KtPoly random_poly(Field field, long degree, SplitMix64& rng) {
  std::vector<Scalar> c;
  for (long i = 0; i <= degree; ++i) c.push_back(rng.scalar(field, coefficient_bound));
  return KtPoly(field, std::move(c));
}

PolyMatrix random_unimodular(Field field, std::size_t n, SplitMix64& rng) {
  PolyMatrix u = PolyMatrix::identity(field, n);
  if (n == 0) return u;
  for (int step = 0; step < 6; ++step) {
    PolyMatrix e = PolyMatrix::identity(field, n);
    const std::size_t i = rng.below(n), j = rng.below(n);
    if (i == j)
      e(i, i) = KtPoly::constant(rng.nonzero_scalar(field, coefficient_bound));
    else
      e(i, j) = random_poly(field, 2, rng);
    u = u * e;
  }
  return u;
}

}  // namespace

Matrix random_matrix(Field field, std::size_t rows, std::size_t cols, SplitMix64& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.scalar(field, coefficient_bound);
  return m;
}

Matrix random_rank_matrix(Field field, std::size_t n, std::size_t r, SplitMix64& rng) {
  for (;;) {
    const Matrix m = random_matrix(field, n, r, rng) * random_matrix(field, r, n, rng);
    if (rank(m) == r) return m;
  }
}

PolyMatrix random_inclusion(Field field, std::size_t max_size, long max_exp, bool t_power, SplitMix64& rng) {
  const std::size_t a = static_cast<std::size_t>(rng.between(1, static_cast<long>(max_size)));
  const std::size_t k = static_cast<std::size_t>(rng.between(0, static_cast<long>(a)));
  PolyMatrix d(field, a, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (t_power) {
      d(i, i) = KtPoly::monomial(rng.nonzero_scalar(field, coefficient_bound),
                                 static_cast<std::size_t>(rng.between(0, max_exp)));
      continue;
    }
    KtPoly p(field);
    while (p.is_zero()) p = random_poly(field, rng.between(0, max_exp), rng);
    d(i, i) = p;
  }
  return random_unimodular(field, a, rng) * d * random_unimodular(field, k, rng);
}

}  // namespace hnlab::cli

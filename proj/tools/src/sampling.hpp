#pragma once

#include <cstddef>

#include "hnlab/matrix.hpp"
#include "hnlab/poly_matrix.hpp"
#include "hnlab/random.hpp"

namespace hnlab::cli {

/// n x n matrix of rank exactly r: a product (n x r)(r x n), redrawn until the rank is right.
Matrix random_rank_matrix(Field field, std::size_t n, std::size_t r, SplitMix64& rng);

Matrix random_matrix(Field field, std::size_t rows, std::size_t cols, SplitMix64& rng);

/// Inclusion K -> A for B = coker, built as U D V with U, V unimodular and D diagonal with
/// nonzero entries: c t^e (e <= max_exp) when t_power is set, otherwise any nonzero
/// polynomial of degree <= max_exp. rank A <= max_size.
PolyMatrix random_inclusion(Field field, std::size_t max_size, long max_exp, bool t_power, SplitMix64& rng);

}  // namespace hnlab::cli

#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "pairlin/instances.hpp"
#include "pairlin/matrix.hpp"

namespace pairlin::cli {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20260117;

// 3x4 sign matrix whose rows are independent although every 3x3 minor is singular.
Matrix sign_a2_fixture();
// 4x4 over the doubled Boolean pair with two nonzero tracks.
Matrix doubled_boolean_fixture();
// 4x4 over counting:5 with 11 zero-free permutations.
Matrix truncated_fixture();
// Rows (1,1), (1,x), (0,1) over the power set of C2.
Matrix powerset_fixture();

// Tangible supertropical entry with value k/2 for k in [2*lo, 2*hi].
Element random_half(const Supertropical& st, Rng& rng, int lo, int hi);
Matrix random_supertropical(const AlgebraPtr& st, std::size_t rows, std::size_t cols, Rng& rng, int lo = -4,
                            int hi = 4);
// Tangible 3x3-style matrix whose identity track and one other track tie for the maximum.
Matrix forced_singular_supertropical(const AlgebraPtr& st, std::size_t n, Rng& rng);
// Tangible matrix with a unique dominant diagonal track.
Matrix random_jacobi_matrix(const AlgebraPtr& st, std::size_t n, Rng& rng);
// Square matrix whose last row is null against a random tangible combination of the others.
// Works over finite pairs and the supertropical pair; nullopt when a column cannot be closed.
std::optional<Matrix> dependent_construction(const AlgebraPtr& alg, std::size_t n, Rng& rng);

}  // namespace pairlin::cli

#pragma once

// Seeded generators for randomized property runs: integer matrices,
// unimodular matrices and type-A-product root data in scrambled coordinates.

#include <cstddef>
#include <random>
#include <vector>

#include "prettygood/intlin.hpp"
#include "prettygood/rootdatum.hpp"

namespace prettygood {

using Rng = std::mt19937_64;

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);

/// Product of `steps` random elementary operations on the identity.
IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps);

/// Roots expressed in the row basis `basis` (c -> c basis^{-1}) and coroots
/// pushed forward (y -> basis y): the same datum in new coordinates.
RootDatum change_basis(const RootDatum& r, const IntMatrix& basis);

struct RandomTypeA {
    std::vector<std::size_t> a_ranks;   // A_{n_i} blocks
    std::size_t torus_rank = 0;
    Integer extension_index = 1;        // [X : ZPhi + Z^torus]
    RootDatum datum;
};

/// Adjoint type-A blocks plus a torus, of total rank in [1, max_rank],
/// enlarged by one glue vector (a weight plus a torus fraction) of order
/// at most max_index, then written in a random unimodular basis.
RandomTypeA random_type_a_datum(Rng& rng, std::size_t max_rank, long max_index = 12);

}  // namespace prettygood

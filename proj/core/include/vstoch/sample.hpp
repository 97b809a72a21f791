#pragma once

#include <cstdint>
#include <vector>

#include "vstoch/bistochastic.hpp"
#include "vstoch/rng.hpp"
#include "vstoch/vector_matrix.hpp"

namespace vstoch {

/// Entrywise-positive bistochastic matrix via alternating row/column
/// normalization of an i.i.d. uniform(0.1, 1.1) start, iterated until both
/// sum residuals are below 1e-12. Deterministic in (n, seed).
Bistochastic sample_sinkhorn(int n, std::uint64_t seed);

/// Convex combination of k uniform random permutation matrices with weights
/// drawn from the interior of the simplex.
Bistochastic sample_birkhoff(int n, int k, std::uint64_t seed);

/// Random element of the isometry set: i.i.d. standard normal coefficients,
/// column frames orthonormalized.
AnyVectorMatrix sample_isometry(Field field, int n, int d, std::uint64_t seed);

/// Uniform random permutation of {0, ..., n-1}.
std::vector<int> random_permutation(int n, Rng& rng);

/// Random unit scalars (phases) of the given field.
template <ScalarType T>
std::vector<T> random_unit_scalars(int count, std::uint64_t seed);

}  // namespace vstoch

#pragma once

#include "padspec/measure.hpp"
#include "padspec/projector.hpp"
#include "padspec/rng.hpp"

namespace padspec::sampling {

/// Nonzero scalar with valuation in [vmin, vmax] and a short random unit.
PadicScalar random_nonzero(Rng& rng, std::int64_t p, std::int32_t precision,
                           std::int64_t vmin = -2, std::int64_t vmax = 2);

/// As random_nonzero but zero with probability zero_prob.
PadicScalar random_scalar(Rng& rng, std::int64_t p, std::int32_t precision,
                          std::int64_t vmin = -2, std::int64_t vmax = 2,
                          double zero_prob = 0.15);

/// Unit (valuation 0) with a random residue.
PadicScalar random_unit(Rng& rng, std::int64_t p, std::int32_t precision);

/// Admissible pi: 0 < |pi| < 1.
PadicScalar random_pi(Rng& rng, std::int64_t p, std::int32_t precision);

/// Random weighted space, weights with small valuations.
SpacePtr random_space(Rng& rng, std::int64_t p, std::int32_t precision,
                      std::size_t dim_min, std::size_t dim_max);

Vector random_vector(Rng& rng, const SpacePtr& space);

Operator random_operator(Rng& rng, const SpacePtr& space);

/// Diagonal operator; when force_repeats, the values are drawn from a pool
/// smaller than the dimension so eigenvalues repeat.
Operator random_diagonal(Rng& rng, const SpacePtr& space, bool force_repeats = false);

/// Unimodular integral matrix (product of unit triangular factors) together
/// with its exact inverse; both have operator norm <= 1 on orthonormal spaces,
/// so conjugation by it is isometric there.
std::pair<Operator, Operator> random_unimodular(Rng& rng, const SpacePtr& space);

/// Random element of the projector algebra: disjoint blocks leaving a
/// nonempty complement, with random coefficients.
BElement random_b_element(Rng& rng, const SpacePtr& space);

AlgebraPtr random_algebra(Rng& rng, std::size_t atoms_min, std::size_t atoms_max);

/// Valid measure over an orthonormal space: level-set projectors of a random
/// assignment of coordinates to atoms (some atoms may be empty), optionally
/// conjugated by a random unimodular isometry.
ProjectionValuedMeasure random_pvm(Rng& rng, const AlgebraPtr& algebra,
                                   const SpacePtr& space, bool conjugate);

StepFunction random_step(Rng& rng, const AlgebraPtr& algebra, std::int64_t p,
                         std::int32_t precision);

KMeasure random_kmeasure(Rng& rng, const AlgebraPtr& algebra, std::int64_t p,
                         std::int32_t precision, double null_prob = 0.2);

}  // namespace padspec::sampling

#pragma once

#include <cstdint>

#include "core/ensemble.hpp"
#include "core/prox_average.hpp"
#include "core/rng.hpp"
#include "core/scalar_means.hpp"

namespace mm {

/// Seeded SPD draw: Q Lambda Q^T with Q a random orthogonal matrix and
/// eigenvalues log-uniform on [1/sqrt(cond_target), sqrt(cond_target)].
/// Deterministic per (seed, dim, cond_target); cond_target = 1 gives Id.
SymMatrix random_spd(std::uint64_t seed, int dim, double cond_target);
SymMatrix random_spd(Rng& rng, int dim, double cond_target);

/// SPD draw with the lowest `zero_count` eigenvalues forced to 0.
SymMatrix random_psd(Rng& rng, int dim, double cond_target, int zero_count);

/// Uniform direction on the unit sphere.
Vec random_unit_vec(Rng& rng, int dim);

/// Near-uniform positive weights (each in [0.5, 1.5] before normalization).
Vec random_weights(Rng& rng, int n);

Ensemble random_pd_ensemble(Rng& rng, int dim, int n, double cond_max,
                            const Tolerances& tol = {});
Ensemble random_psd_ensemble(Rng& rng, int dim, int n, double cond_max,
                             const Tolerances& tol = {});

/// Linear-quadratic ensemble with unit-scale b and r draws; `pd` demands
/// strictly positive definite quadratic parts.
ProxEnsemble random_linquad_ensemble(Rng& rng, int dim, int n, double cond_max, double mu,
                                     bool pd, const Tolerances& tol = {});

/// Positive tuple with entries log-uniform on [0.01, 100].
ScalarTuple random_positive_tuple(Rng& rng, int n);

}  // namespace mm

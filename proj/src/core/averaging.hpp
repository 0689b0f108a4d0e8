#pragma once

#include "core/ensemble.hpp"

namespace mm {

/// Resolvent average R_mu: the matrix whose resolvent (after scaling by mu)
/// is the weighted average of the scaled inputs' resolvents. Evaluated in the
/// overflow-safe factored form T^-1 * Y with
///   T = sum_i w_i (Id + mu A_i)^-1,   Y = sum_i w_i A_i (Id + mu A_i)^-1,
/// which stays well conditioned across the whole [1e-12, 1e12] mu range.
SymMatrix resolvent_average(const Ensemble& ens, MuParam mu, const Tolerances& tol = {});

/// (sum_i w_i A_i^-1)^-1; every input must be positive definite.
SymMatrix harmonic_average(const Ensemble& ens, const Tolerances& tol = {});

/// sum_i w_i A_i.
SymMatrix arithmetic_average(const Ensemble& ens);

/// Same value as resolvent_average, computed by folding two-term averages
/// over prefixes with renormalized weights.
SymMatrix resolvent_average_recursive(const Ensemble& ens, MuParam mu,
                                      const Tolerances& tol = {});

/// Distances of R_mu to the arithmetic and harmonic averages over a
/// log-uniform mu grid, plus the Loewner chain flags between neighbors.
struct SweepReport {
  Vec grid;
  Vec dist_arith;
  Vec dist_harm;
  std::vector<char> chain_ok;  // chain_ok[0] is trivially 1

  bool all_chain_ok() const {
    for (char c : chain_ok)
      if (!c) return false;
    return true;
  }
};

SweepReport mu_sweep(const Ensemble& ens, double mu_lo, double mu_hi, int points,
                     const Tolerances& tol = {});

}  // namespace mm

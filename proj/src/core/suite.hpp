#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/prox_average.hpp"
#include "core/random_instances.hpp"
#include "core/resolvent_calculus.hpp"

namespace mm {

/// Configuration of the randomized property suite.
struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials = 1000;
  int dim_max = 8;
  int n_max = 4;
  double cond_max = 100.0;
  Vec mu_set = {0.01, 0.1, 1.0, 10.0, 100.0};
  Tolerances tol;

  void validate() const;
};

struct PropertyRecord {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst_residual = 0.0;
  std::uint64_t worst_seed_offset = 0;
};

struct CheckReport {
  std::string suite;
  SuiteConfig config;
  std::vector<PropertyRecord> records;

  bool pass() const {
    for (const PropertyRecord& r : records)
      if (r.failures != 0) return false;
    return true;
  }
};

/// Names of every registered check, in execution order.
std::vector<std::string> check_names();

/// Runs the named check (or every check for "all"); deterministic per config.
/// Any failing trial is reproducible from (config.seed, worst_seed_offset).
CheckReport run_suite(const SuiteConfig& cfg, const std::string& suite = "all");

/// Per-instance outcomes used by the registry and directly testable.
struct TrialResult {
  bool ok = true;
  double residual = 0.0;
};

/// Harmonic <= resolvent <= arithmetic in the Loewner order (PD ensemble).
TrialResult check_sandwich(const Ensemble& ens, MuParam mu, const Tolerances& tol = {});
/// inverse(R_mu(A)) == R_{1/mu}(inverses); residual normalized, bound scales
/// with the worst condition number met along the three inversions.
TrialResult check_self_duality(const Ensemble& ens, MuParam mu, const Tolerances& tol = {});
/// inverse(harmonic) == arithmetic of inverses, and vice versa.
TrialResult check_dual_pair(const Ensemble& ens, const Tolerances& tol = {});
/// Loewner monotonicity of the resolvent average in its matrix arguments.
TrialResult check_monotonicity(const Ensemble& lower, const Ensemble& upper, bool strict,
                               MuParam mu, const Tolerances& tol = {});
/// Quadratic-form probe of concavity of ens -> R_mu(ens).
TrialResult check_concavity_resolvent(const Ensemble& a, const Ensemble& b, MuParam mu, double t,
                                      const std::vector<Vec>& probes,
                                      const Tolerances& tol = {});
/// Quadratic-form probe of convexity of X -> X^-1.
TrialResult check_concavity_inverse(const SymMatrix& a, const SymMatrix& b, double t,
                                    const std::vector<Vec>& probes, const Tolerances& tol = {});
/// Midpoint concavity of the weighted scalar harmonic mean.
TrialResult check_concavity_harmonic(const ScalarTuple& a, const ScalarTuple& b,
                                     const Tolerances& tol = {});

}  // namespace mm

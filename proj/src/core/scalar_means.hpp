#pragma once

#include "core/spectral.hpp"

namespace mm {

/// Nonnegative reals with ensemble-style weights.
class ScalarTuple {
 public:
  ScalarTuple(Vec xs, Vec weights);

  int count() const { return static_cast<int>(xs_.size()); }
  double x(int i) const { return xs_[i]; }
  double weight(int i) const { return weights_[i]; }
  const Vec& xs() const { return xs_; }
  const Vec& weights() const { return weights_; }
  bool all_positive() const;

 private:
  Vec xs_;
  Vec weights_;
};

/// (sum_i w_i (x_i + 1)^-1)^-1 - 1; the scalar specialization at mu = 1.
double scalar_resolvent_mean(const ScalarTuple& t);

/// prod_i x_i^{w_i}; exactly 0 when any x_i = 0.
double weighted_geometric_mean(const ScalarTuple& t);

/// (sum_i w_i / x_i)^-1; requires strictly positive entries.
double scalar_harmonic_mean(const ScalarTuple& t);

double scalar_arithmetic_mean(const ScalarTuple& t);

/// Two-matrix geometric mean A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2};
/// A must be PD, B may be merely PSD.
SymMatrix geometric_mean2(const SymMatrix& a, const SymMatrix& b, const Tolerances& tol = {});

enum class MeanOrder { RGreater, GGreater, Equal };
const char* to_string(MeanOrder o);

/// Sign of resolvent mean minus geometric mean with an eq-sized tie band.
MeanOrder compare_resolvent_geometric(const ScalarTuple& t, const Tolerances& tol = {});

}  // namespace mm

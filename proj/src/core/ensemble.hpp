#pragma once

#include <cmath>
#include <vector>

#include "core/spectral.hpp"

namespace mm {

/// Strictly positive, finite averaging parameter.
struct MuParam {
  double value;
  explicit MuParam(double v) : value(v) {
    if (!(v > 0.0) || !std::isfinite(v))
      fail(Errc::BadArgument, "mu must be strictly positive and finite");
  }
};

/// Weighted tuple of same-dimension PSD matrices. Weights must be strictly
/// positive and sum to one within 1e-6; they are renormalized exactly at
/// construction.
class Ensemble {
 public:
  Ensemble(std::vector<SymMatrix> matrices, Vec weights, const Tolerances& tol = {});

  int count() const { return static_cast<int>(matrices_.size()); }
  int dim() const { return matrices_.front().dim(); }
  const SymMatrix& matrix(int i) const { return matrices_[i]; }
  double weight(int i) const { return weights_[i]; }
  const std::vector<SymMatrix>& matrices() const { return matrices_; }
  const Vec& weights() const { return weights_; }

 private:
  std::vector<SymMatrix> matrices_;
  Vec weights_;
};

/// Shared weight validation (also used by scalar tuples and prox ensembles):
/// checks positivity and the 1e-6 sum window, returns the renormalized vector.
Vec normalize_weights(Vec weights);

}  // namespace mm

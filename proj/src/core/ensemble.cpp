#include "core/ensemble.hpp"

#include <string>

namespace mm {

Vec normalize_weights(Vec weights) {
  if (weights.empty()) fail(Errc::BadArgument, "weight vector must be nonempty");
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w)) fail(Errc::NonFinite, "weights must be finite");
    if (!(w > 0.0)) fail(Errc::BadArgument, "weights must be strictly positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-6)
    fail(Errc::BadArgument, "weights must sum to 1 within 1e-6");
  for (double& w : weights) w /= sum;
  return weights;
}

Ensemble::Ensemble(std::vector<SymMatrix> matrices, Vec weights, const Tolerances& tol)
    : matrices_(std::move(matrices)), weights_(normalize_weights(std::move(weights))) {
  tol.validate();
  if (matrices_.empty()) fail(Errc::BadArgument, "ensemble needs at least one matrix");
  if (weights_.size() != matrices_.size())
    fail(Errc::DimMismatch, "ensemble needs one weight per matrix");
  const int n = matrices_.front().dim();
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    if (matrices_[i].dim() != n) fail(Errc::DimMismatch, "ensemble matrices must share one dimension");
    if (!is_psd(matrices_[i], tol))
      fail(Errc::NotPositiveSemidefinite,
           "ensemble matrix " + std::to_string(i) + " is not positive semidefinite");
  }
}

}  // namespace mm

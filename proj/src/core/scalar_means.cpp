#include "core/scalar_means.hpp"

#include <cmath>

#include "core/ensemble.hpp"

namespace mm {

ScalarTuple::ScalarTuple(Vec xs, Vec weights)
    : xs_(std::move(xs)), weights_(normalize_weights(std::move(weights))) {
  if (xs_.empty()) fail(Errc::BadArgument, "scalar tuple must be nonempty");
  if (xs_.size() != weights_.size())
    fail(Errc::DimMismatch, "scalar tuple needs one weight per entry");
  for (double v : xs_) {
    if (!std::isfinite(v)) fail(Errc::NonFinite, "scalar tuple entries must be finite");
    if (v < 0.0) fail(Errc::BadArgument, "scalar tuple entries must be nonnegative");
  }
}

bool ScalarTuple::all_positive() const {
  for (double v : xs_)
    if (!(v > 0.0)) return false;
  return true;
}

double scalar_resolvent_mean(const ScalarTuple& t) {
  double s = 0.0;
  for (int i = 0; i < t.count(); ++i) s += t.weight(i) / (t.x(i) + 1.0);
  return 1.0 / s - 1.0;
}

double weighted_geometric_mean(const ScalarTuple& t) {
  double p = 1.0;
  for (int i = 0; i < t.count(); ++i) p *= std::pow(t.x(i), t.weight(i));
  return p;
}

double scalar_harmonic_mean(const ScalarTuple& t) {
  if (!t.all_positive())
    fail(Errc::NotPositiveDefinite, "harmonic mean requires strictly positive entries");
  double s = 0.0;
  for (int i = 0; i < t.count(); ++i) s += t.weight(i) / t.x(i);
  return 1.0 / s;
}

double scalar_arithmetic_mean(const ScalarTuple& t) {
  double s = 0.0;
  for (int i = 0; i < t.count(); ++i) s += t.weight(i) * t.x(i);
  return s;
}

SymMatrix geometric_mean2(const SymMatrix& a, const SymMatrix& b, const Tolerances& tol) {
  require_same_dim(a, b);
  const Spectrum sa = eigendecompose(a, tol);
  if (sa.lambda_min() < tol.psd * (1.0 + a.frobenius_norm()))
    fail(Errc::NotPositiveDefinite, "geometric mean requires a PD first argument");
  const SymMatrix root = sa.map([](double v) { return std::sqrt(v); });
  const SymMatrix root_inv = sa.map([](double v) { return 1.0 / std::sqrt(v); });
  const SymMatrix middle = sqrt_psd(congruence(root_inv, b), tol);
  return congruence(root, middle);
}

const char* to_string(MeanOrder o) {
  switch (o) {
    case MeanOrder::RGreater: return "RGreater";
    case MeanOrder::GGreater: return "GGreater";
    case MeanOrder::Equal: return "Equal";
  }
  return "?";
}

MeanOrder compare_resolvent_geometric(const ScalarTuple& t, const Tolerances& tol) {
  const double r = scalar_resolvent_mean(t);
  const double g = weighted_geometric_mean(t);
  const double band = tol.eq * (1.0 + std::abs(r) + std::abs(g));
  if (std::abs(r - g) <= band) return MeanOrder::Equal;
  return r > g ? MeanOrder::RGreater : MeanOrder::GGreater;
}

}  // namespace mm

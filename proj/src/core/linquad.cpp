#include "core/linquad.hpp"

#include <cmath>

namespace mm {

LinQuad::LinQuad(SymMatrix a, Vec b, double r, const Tolerances& tol)
    : a_(std::move(a)), b_(std::move(b)), r_(r) {
  tol.validate();
  if (static_cast<int>(b_.size()) != a_.dim())
    fail(Errc::DimMismatch, "linear term length must match the quadratic part");
  if (!all_finite(b_) || !std::isfinite(r_))
    fail(Errc::NonFinite, "linear-quadratic coefficients must be finite");
  if (!is_psd(a_, tol))
    fail(Errc::NotPositiveSemidefinite, "quadratic part must be positive semidefinite");
}

double LinQuad::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim()) fail(Errc::DimMismatch, "eval: wrong probe dimension");
  return a_.quad_form(x) + dot(b_, x) + r_;
}

Vec LinQuad::gradient(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim())
    fail(Errc::DimMismatch, "gradient: wrong probe dimension");
  Vec g = a_.apply(x);
  for (std::size_t k = 0; k < g.size(); ++k) g[k] += b_[k];
  return g;
}

LinQuad weighted_sum_linquad(const std::vector<LinQuad>& funcs, std::span<const double> weights,
                             const Tolerances& tol) {
  if (funcs.empty() || funcs.size() != weights.size())
    fail(Errc::DimMismatch, "weighted sum needs one weight per function");
  const int n = funcs.front().dim();
  SymMatrix a = SymMatrix::zeros(n);
  Vec b(n, 0.0);
  double r = 0.0;
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    a.add_scaled(funcs[i].quad(), weights[i]);
    for (int k = 0; k < n; ++k) b[k] += weights[i] * funcs[i].linear()[k];
    r += weights[i] * funcs[i].constant();
  }
  return LinQuad(std::move(a), std::move(b), r, tol);
}

LinQuad conjugate_linquad(const LinQuad& f, const Tolerances& tol) {
  const Spectrum sp = eigendecompose(f.quad(), tol);
  if (sp.lambda_min() < tol.psd * (1.0 + f.quad().frobenius_norm()))
    fail(Errc::NotPositiveDefinite,
         "conjugate of a linear-quadratic function needs a PD quadratic part");
  const SymMatrix a_inv = sp.map([](double v) { return 1.0 / v; });
  Vec b_star = a_inv.apply(f.linear());
  const double r_star = 0.5 * dot(b_star, f.linear()) - f.constant();
  for (double& v : b_star) v = -v;
  return LinQuad(a_inv, std::move(b_star), r_star, tol);
}

}  // namespace mm

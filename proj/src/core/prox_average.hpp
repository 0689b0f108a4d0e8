#pragma once

#include "core/averaging.hpp"
#include "core/linquad.hpp"

namespace mm {

/// Weighted tuple of same-dimension linear-quadratic functions plus the
/// averaging parameter mu.
class ProxEnsemble {
 public:
  ProxEnsemble(std::vector<LinQuad> funcs, Vec weights, MuParam mu, const Tolerances& tol = {});

  int count() const { return static_cast<int>(funcs_.size()); }
  int dim() const { return funcs_.front().dim(); }
  const LinQuad& func(int i) const { return funcs_[i]; }
  const std::vector<LinQuad>& funcs() const { return funcs_; }
  double weight(int i) const { return weights_[i]; }
  const Vec& weights() const { return weights_; }
  double mu() const { return mu_; }

  ProxEnsemble with_mu(MuParam mu) const;

 private:
  std::vector<LinQuad> funcs_;
  Vec weights_;
  double mu_;
};

/// Closed-form proximal average of linear-quadratic functions: the quadratic
/// part is the resolvent average of the quadratic parts; the linear and
/// constant parts come from the shifted-conjugate expansion
///   b_out = M^-1 m,  r_out = q_{M^-1}(m) - sum_i w_i (q_{(A_i + Id/mu)^-1}(b_i) - r_i)
/// with M = sum_i w_i (A_i + Id/mu)^-1 and m = sum_i w_i (A_i + Id/mu)^-1 b_i.
LinQuad prox_average_closed(const ProxEnsemble& pens, const Tolerances& tol = {});

/// The two infimal-convolution representations backing the oracle:
/// Split optimizes over x_1 + ... + x_n = x; Barycentric over
/// sum_i w_i y_i = x with the pairwise-distance penalty.
enum class ProxRep { Split, Barycentric };

/// Evaluates the proximal average at x by solving the chosen representation's
/// equality-constrained QP through its KKT system (dense LU, independent of
/// the spectral path used by the closed form).
double prox_average_value(const ProxEnsemble& pens, std::span<const double> x, ProxRep rep,
                          const Tolerances& tol = {});

/// Coefficient-level discrepancy between conj(prox_avg(f, mu)) and
/// prox_avg(conj f, 1/mu); the contract is residual <= eq * scale.
struct FenchelCheck {
  double residual;
  double scale;
};

FenchelCheck fenchel_selfdual_check(const ProxEnsemble& pens, const Tolerances& tol = {});

/// True iff the closed-form value at mu_lo dominates the value at mu_hi up to
/// eq-slack; requires mu_lo < mu_hi.
bool mu_monotonicity_check(const ProxEnsemble& pens, MuParam mu_lo, MuParam mu_hi,
                           std::span<const double> x, const Tolerances& tol = {});

}  // namespace mm

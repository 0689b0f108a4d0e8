#include "core/averaging.hpp"

#include <cmath>
#include <string>

namespace mm {

SymMatrix resolvent_average(const Ensemble& ens, MuParam mu_param, const Tolerances& tol) {
  tol.validate();
  const double mu = mu_param.value;
  if (!(mu >= 1e-12 && mu <= 1e12))
    fail(Errc::NonFiniteResult, "mu outside [1e-12, 1e12] is rejected");
  const int dim = ens.dim();

  SymMatrix t = SymMatrix::zeros(dim);
  SymMatrix y = SymMatrix::zeros(dim);
  for (int i = 0; i < ens.count(); ++i) {
    const Spectrum sp = eigendecompose(ens.matrix(i), tol);
    const double w = ens.weight(i);
    t.add_scaled(sp.map([&](double a) { return 1.0 / (1.0 + mu * a); }), w);
    y.add_scaled(sp.map([&](double a) { return a / (1.0 + mu * a); }), w);
  }

  // T is a convex combination of matrices with spectrum in (0, 1]; invert it
  // spectrally without the PD dead-band gate, which would misfire when
  // mu * lambda_max is extreme.
  const Spectrum st = eigendecompose(t, tol);
  if (!(st.lambda_min() > 0.0))
    fail(Errc::NonFiniteResult, "resolvent average lost positivity at this mu/conditioning");
  const SymMatrix t_inv = st.map([](double a) { return 1.0 / a; });
  return symmetrized_product(t_inv, y);
}

SymMatrix harmonic_average(const Ensemble& ens, const Tolerances& tol) {
  tol.validate();
  const int dim = ens.dim();
  SymMatrix acc = SymMatrix::zeros(dim);
  for (int i = 0; i < ens.count(); ++i) {
    const SymMatrix& a = ens.matrix(i);
    const Spectrum sp = eigendecompose(a, tol);
    if (sp.lambda_min() < tol.psd * (1.0 + a.frobenius_norm()))
      fail(Errc::NotPositiveDefinite,
           "harmonic average requires positive definite matrices; matrix " + std::to_string(i) +
               " is not");
    acc.add_scaled(sp.map([](double v) { return 1.0 / v; }), ens.weight(i));
  }
  return inverse(acc, tol);
}

SymMatrix arithmetic_average(const Ensemble& ens) {
  SymMatrix acc = SymMatrix::zeros(ens.dim());
  for (int i = 0; i < ens.count(); ++i) acc.add_scaled(ens.matrix(i), ens.weight(i));
  return acc;
}

SymMatrix resolvent_average_recursive(const Ensemble& ens, MuParam mu, const Tolerances& tol) {
  if (ens.count() < 2)
    fail(Errc::BadArgument, "recursive evaluation needs at least two matrices");
  SymMatrix cur = ens.matrix(0);
  double prefix_weight = ens.weight(0);
  for (int k = 1; k < ens.count(); ++k) {
    const double wk = ens.weight(k);
    const double total = prefix_weight + wk;
    if (prefix_weight / total < 1e-14 || wk / total < 1e-14)
      fail(Errc::DegenerateWeight, "weight renormalization divides by less than 1e-14");
    Ensemble two({cur, ens.matrix(k)}, {prefix_weight / total, wk / total}, tol);
    cur = resolvent_average(two, mu, tol);
    prefix_weight = total;
  }
  return cur;
}

SweepReport mu_sweep(const Ensemble& ens, double mu_lo, double mu_hi, int points,
                     const Tolerances& tol) {
  if (!(mu_lo > 0.0 && mu_lo < mu_hi) || !std::isfinite(mu_hi))
    fail(Errc::BadArgument, "sweep needs 0 < mu_lo < mu_hi");
  if (points < 2) fail(Errc::BadArgument, "sweep needs at least 2 grid points");

  const SymMatrix arith = arithmetic_average(ens);
  const SymMatrix harm = harmonic_average(ens, tol);  // enforces the PD precondition

  SweepReport rep;
  rep.grid.resize(points);
  rep.dist_arith.resize(points);
  rep.dist_harm.resize(points);
  rep.chain_ok.assign(points, 1);

  const double llo = std::log(mu_lo);
  const double lhi = std::log(mu_hi);
  SymMatrix prev = SymMatrix::zeros(ens.dim());
  for (int j = 0; j < points; ++j) {
    const double mu = std::exp(llo + (lhi - llo) * j / (points - 1));
    const SymMatrix r = resolvent_average(ens, MuParam(mu), tol);
    rep.grid[j] = mu;
    rep.dist_arith[j] = frobenius_distance(r, arith);
    rep.dist_harm[j] = frobenius_distance(r, harm);
    if (j > 0) rep.chain_ok[j] = loewner_at_least(loewner_cmp(prev, r, tol)) ? 1 : 0;
    prev = r;
  }
  return rep;
}

}  // namespace mm

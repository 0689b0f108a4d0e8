#include "core/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace mm {
namespace {

double pick_mu(const SuiteConfig& cfg, Rng& rng) {
  return cfg.mu_set[rng.uniform_int(0, static_cast<int>(cfg.mu_set.size()) - 1)];
}

int pick_dim(const SuiteConfig& cfg, Rng& rng) { return rng.uniform_int(1, cfg.dim_max); }
int pick_n(const SuiteConfig& cfg, Rng& rng) { return rng.uniform_int(1, cfg.n_max); }

struct GeCheck {
  bool ok;
  double lambda_min;  // of the difference; 0 when the difference is negligible
};

// X >= Y in the Loewner order, with the same dead-band as loewner_cmp but a
// single decomposition and the residual exposed.
GeCheck loewner_ge(const SymMatrix& x, const SymMatrix& y, const Tolerances& tol) {
  const SymMatrix d = x - y;
  if (d.frobenius_norm() <= tol.psd * (1.0 + x.frobenius_norm() + y.frobenius_norm()))
    return {true, 0.0};
  const Spectrum sp = eigendecompose(d, tol);
  const double band = tol.psd * (1.0 + d.frobenius_norm());
  return {sp.lambda_min() >= -band, sp.lambda_min()};
}

std::vector<SymMatrix> inverted_matrices(const Ensemble& ens, const Tolerances& tol,
                                         double& kappa_max) {
  std::vector<SymMatrix> out;
  out.reserve(ens.count());
  for (int i = 0; i < ens.count(); ++i) {
    const Spectrum sp = eigendecompose(ens.matrix(i), tol);
    if (sp.lambda_min() < tol.psd * (1.0 + ens.matrix(i).frobenius_norm()))
      fail(Errc::NotPositiveDefinite, "duality checks need positive definite matrices");
    kappa_max = std::max(kappa_max, condition_number(sp));
    out.push_back(sp.map([](double v) { return 1.0 / v; }));
  }
  return out;
}

std::vector<Vec> random_probes(Rng& rng, int dim, int count) {
  std::vector<Vec> probes;
  probes.reserve(count);
  for (int k = 0; k < count; ++k) {
    Vec p = random_unit_vec(rng, dim);
    const double scale = rng.uniform(0.5, 2.0);
    for (double& v : p) v *= scale;
    probes.push_back(std::move(p));
  }
  return probes;
}

constexpr double kLimitGridLo = 1e-6;
constexpr double kLimitGridHi = 1e6;
constexpr int kLimitGridPoints = 25;
constexpr double kLimitFactor = 1e-4;
constexpr double kStrictSpread = 1e-3;

}  // namespace

void SuiteConfig::validate() const {
  if (trials < 1) fail(Errc::BadArgument, "suite needs trials >= 1");
  if (dim_max < 1) fail(Errc::BadArgument, "suite needs dim_max >= 1");
  if (n_max < 1) fail(Errc::BadArgument, "suite needs n_max >= 1");
  if (!(cond_max >= 1.0)) fail(Errc::BadArgument, "suite needs cond_max >= 1");
  if (mu_set.empty()) fail(Errc::BadArgument, "suite needs a nonempty mu set");
  for (double m : mu_set)
    if (!(m > 0.0) || !std::isfinite(m)) fail(Errc::BadArgument, "mu values must be in (0, inf)");
  tol.validate();
}

TrialResult check_sandwich(const Ensemble& ens, MuParam mu, const Tolerances& tol) {
  const SymMatrix r = resolvent_average(ens, mu, tol);
  const SymMatrix h = harmonic_average(ens, tol);
  const SymMatrix a = arithmetic_average(ens);
  const GeCheck upper = loewner_ge(a, r, tol);
  const GeCheck lower = loewner_ge(r, h, tol);
  const double neg = std::max(std::max(0.0, -upper.lambda_min), std::max(0.0, -lower.lambda_min));
  return {upper.ok && lower.ok, neg};
}

TrialResult check_self_duality(const Ensemble& ens, MuParam mu, const Tolerances& tol) {
  double kappa_max = 1.0;
  std::vector<SymMatrix> invs = inverted_matrices(ens, tol, kappa_max);

  const SymMatrix r = resolvent_average(ens, mu, tol);
  const Spectrum sr = eigendecompose(r, tol);
  if (sr.lambda_min() < tol.psd * (1.0 + r.frobenius_norm()))
    fail(Errc::NotPositiveDefinite, "resolvent average lost definiteness");
  kappa_max = std::max(kappa_max, condition_number(sr));
  const SymMatrix r_inv = sr.map([](double v) { return 1.0 / v; });

  const Ensemble dual(std::move(invs), ens.weights(), tol);
  const SymMatrix r_dual = resolvent_average(dual, MuParam(1.0 / mu.value), tol);
  const double rel =
      frobenius_distance(r_inv, r_dual) / (1.0 + r_inv.frobenius_norm());
  return {rel <= tol.eq * kappa_max, rel};
}

TrialResult check_dual_pair(const Ensemble& ens, const Tolerances& tol) {
  double kappa_max = 1.0;
  std::vector<SymMatrix> invs = inverted_matrices(ens, tol, kappa_max);
  const Ensemble dual(std::move(invs), ens.weights(), tol);

  const SymMatrix harm = harmonic_average(ens, tol);
  const SymMatrix arith = arithmetic_average(ens);
  const Spectrum sh = eigendecompose(harm, tol);
  const Spectrum sa = eigendecompose(arith, tol);
  kappa_max = std::max({kappa_max, condition_number(sh), condition_number(sa)});

  const double r1 = frobenius_distance(sh.map([](double v) { return 1.0 / v; }),
                                       arithmetic_average(dual)) /
                    (1.0 + 1.0 / sh.lambda_min());
  const double r2 = frobenius_distance(sa.map([](double v) { return 1.0 / v; }),
                                       harmonic_average(dual, tol)) /
                    (1.0 + 1.0 / sa.lambda_min());
  const double rel = std::max(r1, r2);
  return {rel <= tol.eq * kappa_max, rel};
}

TrialResult check_monotonicity(const Ensemble& lower, const Ensemble& upper, bool strict,
                               MuParam mu, const Tolerances& tol) {
  const SymMatrix r_lo = resolvent_average(lower, mu, tol);
  const SymMatrix r_hi = resolvent_average(upper, mu, tol);
  if (strict) {
    const LoewnerOrdering cmp = loewner_cmp(r_hi, r_lo, tol);
    const GeCheck ge = loewner_ge(r_hi, r_lo, tol);
    return {cmp == LoewnerOrdering::StrictGreater, std::max(0.0, -ge.lambda_min)};
  }
  const GeCheck ge = loewner_ge(r_hi, r_lo, tol);
  return {ge.ok, std::max(0.0, -ge.lambda_min)};
}

TrialResult check_concavity_resolvent(const Ensemble& a, const Ensemble& b, MuParam mu, double t,
                                      const std::vector<Vec>& probes, const Tolerances& tol) {
  if (a.count() != b.count() || a.dim() != b.dim())
    fail(Errc::DimMismatch, "concavity check needs ensembles of matching shape");
  std::vector<SymMatrix> mixed;
  mixed.reserve(a.count());
  for (int i = 0; i < a.count(); ++i)
    mixed.push_back(a.matrix(i) * t + b.matrix(i) * (1.0 - t));
  const SymMatrix r_mix = resolvent_average(Ensemble(std::move(mixed), a.weights(), tol), mu, tol);
  const SymMatrix r_a = resolvent_average(a, mu, tol);
  const SymMatrix r_b = resolvent_average(b, mu, tol);

  TrialResult res;
  for (const Vec& x : probes) {
    const double lhs = r_mix.quad_form(x);
    const double rhs = t * r_a.quad_form(x) + (1.0 - t) * r_b.quad_form(x);
    const double gap = rhs - lhs;  // concavity: should be <= eq
    res.residual = std::max(res.residual, std::max(0.0, gap));
    if (gap > tol.eq) res.ok = false;
  }
  return res;
}

TrialResult check_concavity_inverse(const SymMatrix& a, const SymMatrix& b, double t,
                                    const std::vector<Vec>& probes, const Tolerances& tol) {
  const SymMatrix mix_inv = inverse(a * t + b * (1.0 - t), tol);
  const SymMatrix a_inv = inverse(a, tol);
  const SymMatrix b_inv = inverse(b, tol);
  TrialResult res;
  for (const Vec& x : probes) {
    const double lhs = mix_inv.quad_form(x);
    const double rhs = t * a_inv.quad_form(x) + (1.0 - t) * b_inv.quad_form(x);
    const double gap = lhs - rhs;  // convexity: should be <= eq
    res.residual = std::max(res.residual, std::max(0.0, gap));
    if (gap > tol.eq) res.ok = false;
  }
  return res;
}

TrialResult check_concavity_harmonic(const ScalarTuple& a, const ScalarTuple& b,
                                     const Tolerances& tol) {
  if (a.count() != b.count())
    fail(Errc::DimMismatch, "harmonic concavity check needs tuples of one length");
  Vec mid(a.count());
  for (int i = 0; i < a.count(); ++i) mid[i] = 0.5 * (a.x(i) + b.x(i));
  const ScalarTuple m(std::move(mid), a.weights());
  const double lhs = scalar_harmonic_mean(m);
  const double rhs = 0.5 * scalar_harmonic_mean(a) + 0.5 * scalar_harmonic_mean(b);
  const double gap = rhs - lhs;
  return {gap <= tol.eq, std::max(0.0, gap)};
}

namespace {

using TrialFn = std::function<TrialResult(const SuiteConfig&, Rng&, int)>;

struct CheckDef {
  const char* name;
  TrialFn fn;
};

TrialResult identity_trial(const SuiteConfig& cfg, Rng& rng, bool yosida_side) {
  const Ensemble ens =
      random_psd_ensemble(rng, pick_dim(cfg, rng), pick_n(cfg, rng), cfg.cond_max, cfg.tol);
  const double mu = pick_mu(cfg, rng);
  const double residual = yosida_side
                              ? yosida_identity_residual(ens, MuParam(mu), cfg.tol)
                              : resolvent_identity_residual(ens, MuParam(mu), cfg.tol);
  const double bound = yosida_side
                           ? cfg.tol.eq * (1.0 + ens.count()) * std::max(1.0, 1.0 / mu)
                           : cfg.tol.eq * (1.0 + ens.count());
  return {residual <= bound, residual};
}

TrialResult inverse_pair_trial(const SuiteConfig& cfg, Rng& rng) {
  const int dim = pick_dim(cfg, rng);
  const int pairs = rng.uniform_int(1, std::max(1, cfg.n_max / 2));
  std::vector<SymMatrix> mats;
  double kappa_max = 1.0;
  for (int i = 0; i < pairs; ++i) {
    const SymMatrix a = random_spd(rng, dim, cfg.cond_max);
    const Spectrum sp = eigendecompose(a, cfg.tol);
    kappa_max = std::max(kappa_max, condition_number(sp));
    mats.push_back(a);
    mats.push_back(sp.map([](double v) { return 1.0 / v; }));
  }
  const Ensemble ens(std::move(mats), Vec(2 * pairs, 1.0 / (2.0 * pairs)), cfg.tol);
  const SymMatrix r = resolvent_average(ens, MuParam(1.0), cfg.tol);
  const double residual = frobenius_distance(r, SymMatrix::identity(dim));
  return {residual <= cfg.tol.eq * (1.0 + kappa_max), residual};
}

TrialResult constant_ensemble_trial(const SuiteConfig& cfg, Rng& rng) {
  const int dim = pick_dim(cfg, rng);
  const int n = pick_n(cfg, rng);
  const SymMatrix a = random_psd(rng, dim, cfg.cond_max, rng.uniform_int(0, dim / 2));
  const Ensemble ens(std::vector<SymMatrix>(n, a), random_weights(rng, n), cfg.tol);
  const SymMatrix r = resolvent_average(ens, MuParam(pick_mu(cfg, rng)), cfg.tol);
  const double residual = frobenius_distance(r, a);
  return {residual <= cfg.tol.eq * (1.0 + a.frobenius_norm()), residual};
}

TrialResult monotonicity_trial(const SuiteConfig& cfg, Rng& rng, bool strict) {
  const int dim = pick_dim(cfg, rng);
  const int n = pick_n(cfg, rng);
  const Vec weights = random_weights(rng, n);
  std::vector<SymMatrix> lower, upper;
  for (int i = 0; i < n; ++i) {
    SymMatrix base = random_psd(rng, dim, cfg.cond_max, rng.uniform_int(0, dim / 2));
    SymMatrix bumped = base;
    if (rng.uniform() < 0.5) {
      const SymMatrix pert = random_psd(rng, dim, 10.0, rng.uniform_int(0, dim - 1));
      bumped.add_scaled(pert, 0.5);
    }
    lower.push_back(std::move(base));
    upper.push_back(std::move(bumped));
  }
  if (strict) {
    const int j = rng.uniform_int(0, n - 1);
    upper[j].add_scaled(random_spd(rng, dim, 10.0), 0.5);
  }
  return check_monotonicity(Ensemble(std::move(lower), weights, cfg.tol),
                            Ensemble(std::move(upper), weights, cfg.tol), strict,
                            MuParam(pick_mu(cfg, rng)), cfg.tol);
}

TrialResult closure_trial(const SuiteConfig& cfg, Rng& rng, bool pd_variant) {
  const int dim = pick_dim(cfg, rng);
  const int n = pick_n(cfg, rng);
  std::vector<SymMatrix> mats;
  for (int i = 0; i < n; ++i)
    mats.push_back(random_psd(rng, dim, cfg.cond_max, rng.uniform_int(0, dim / 2)));
  if (pd_variant) mats[rng.uniform_int(0, n - 1)] = random_spd(rng, dim, cfg.cond_max);
  const Ensemble ens(std::move(mats), random_weights(rng, n), cfg.tol);
  const SymMatrix r = resolvent_average(ens, MuParam(pick_mu(cfg, rng)), cfg.tol);
  const Spectrum sp = eigendecompose(r, cfg.tol);
  const double band = cfg.tol.psd * (1.0 + r.frobenius_norm());
  const bool ok = pd_variant ? sp.lambda_min() >= band : sp.lambda_min() >= -band;
  return {ok, std::max(0.0, -sp.lambda_min())};
}

TrialResult recursion_trial(const SuiteConfig& cfg, Rng& rng) {
  const int dim = pick_dim(cfg, rng);
  const int n = rng.uniform_int(2, std::max(2, cfg.n_max));
  const Ensemble ens = random_psd_ensemble(rng, dim, n, cfg.cond_max, cfg.tol);
  const MuParam mu(pick_mu(cfg, rng));
  const SymMatrix direct = resolvent_average(ens, mu, cfg.tol);
  const SymMatrix folded = resolvent_average_recursive(ens, mu, cfg.tol);
  const double residual = frobenius_distance(direct, folded);
  return {residual <= cfg.tol.eq * (1.0 + direct.frobenius_norm()), residual};
}

TrialResult fenchel_trial(const SuiteConfig& cfg, Rng& rng) {
  const ProxEnsemble pens =
      random_linquad_ensemble(rng, pick_dim(cfg, rng), pick_n(cfg, rng), cfg.cond_max,
                              pick_mu(cfg, rng), /*pd=*/true, cfg.tol);
  const FenchelCheck fc = fenchel_selfdual_check(pens, cfg.tol);
  return {fc.residual <= cfg.tol.eq * fc.scale, fc.residual / fc.scale};
}

TrialResult function_sandwich_trial(const SuiteConfig& cfg, Rng& rng) {
  const int dim = pick_dim(cfg, rng);
  const ProxEnsemble pens = random_linquad_ensemble(rng, dim, pick_n(cfg, rng), cfg.cond_max,
                                                    pick_mu(cfg, rng), /*pd=*/true, cfg.tol);
  Vec x = random_unit_vec(rng, dim);
  const double scale = rng.uniform(0.0, 2.0);
  for (double& v : x) v *= scale;

  std::vector<LinQuad> conj;
  for (const LinQuad& f : pens.funcs()) conj.push_back(conjugate_linquad(f, cfg.tol));
  const double left =
      conjugate_linquad(weighted_sum_linquad(conj, pens.weights(), cfg.tol), cfg.tol).eval(x);
  const double mid = prox_average_closed(pens, cfg.tol).eval(x);
  const double right = weighted_sum_linquad(pens.funcs(), pens.weights(), cfg.tol).eval(x);

  const double slack =
      cfg.tol.eq * (1.0 + std::abs(left) + std::abs(mid) + std::abs(right));
  const double viol = std::max(left - mid, mid - right);
  return {viol <= slack, std::max(0.0, viol)};
}

TrialResult mu_value_monotonicity_trial(const SuiteConfig& cfg, Rng& rng) {
  const int dim = pick_dim(cfg, rng);
  const ProxEnsemble pens = random_linquad_ensemble(rng, dim, pick_n(cfg, rng), cfg.cond_max,
                                                    1.0, /*pd=*/false, cfg.tol);
  const double lo = rng.log_uniform(0.01, 10.0);
  const double hi = lo * rng.log_uniform(1.5, 100.0);
  const Vec x = random_unit_vec(rng, dim);
  const bool ok = mu_monotonicity_check(pens, MuParam(lo), MuParam(hi), x, cfg.tol);
  return {ok, ok ? 0.0 : 1.0};
}

TrialResult prox_oracle_trial(const SuiteConfig& cfg, Rng& rng) {
  const int dim = pick_dim(cfg, rng);
  const ProxEnsemble pens = random_linquad_ensemble(rng, dim, pick_n(cfg, rng), cfg.cond_max,
                                                    pick_mu(cfg, rng), /*pd=*/false, cfg.tol);
  const LinQuad closed = prox_average_closed(pens, cfg.tol);
  TrialResult res;
  for (int probe = 0; probe < 2; ++probe) {
    Vec x = random_unit_vec(rng, dim);
    const double scale = rng.uniform(0.0, 2.0);
    for (double& v : x) v *= scale;
    const double v_closed = closed.eval(x);
    const double v_split = prox_average_value(pens, x, ProxRep::Split, cfg.tol);
    const double v_bary = prox_average_value(pens, x, ProxRep::Barycentric, cfg.tol);
    const double sc = 1.0 + std::abs(v_closed);
    const double rep_diff = std::abs(v_split - v_bary);
    const double closed_diff = std::max(std::abs(v_closed - v_split), std::abs(v_closed - v_bary));
    res.residual = std::max({res.residual, rep_diff / sc, closed_diff / sc});
    if (rep_diff > cfg.tol.eq * sc || closed_diff > 10.0 * cfg.tol.eq * sc) res.ok = false;
  }
  return res;
}

TrialResult matrix_sandwich_trial(const SuiteConfig& cfg, Rng& rng) {
  const Ensemble ens =
      random_pd_ensemble(rng, pick_dim(cfg, rng), pick_n(cfg, rng), cfg.cond_max, cfg.tol);
  return check_sandwich(ens, MuParam(pick_mu(cfg, rng)), cfg.tol);
}

TrialResult limit_trial(const SuiteConfig& cfg, Rng& rng, bool harmonic_side) {
  const Ensemble ens =
      random_pd_ensemble(rng, pick_dim(cfg, rng), pick_n(cfg, rng), cfg.cond_max, cfg.tol);
  const SweepReport rep = mu_sweep(ens, kLimitGridLo, kLimitGridHi, kLimitGridPoints, cfg.tol);
  const SymMatrix target =
      harmonic_side ? harmonic_average(ens, cfg.tol) : arithmetic_average(ens);
  const double target_norm = target.frobenius_norm();
  const Vec& dist = harmonic_side ? rep.dist_harm : rep.dist_arith;
  const double endpoint = harmonic_side ? dist.back() : dist.front();

  bool ok = endpoint <= kLimitFactor * target_norm;
  const double slack = cfg.tol.eq * (1.0 + target_norm);
  for (std::size_t j = 0; j + 1 < dist.size(); ++j) {
    // toward the limit the distance must not grow: decreasing mu for the
    // arithmetic side, increasing mu for the harmonic side
    const bool monotone = harmonic_side ? dist[j + 1] <= dist[j] + slack
                                        : dist[j] <= dist[j + 1] + slack;
    if (!monotone) ok = false;
  }
  return {ok, endpoint / target_norm};
}

TrialResult sweep_chain_trial(const SuiteConfig& cfg, Rng& rng) {
  const Ensemble ens =
      random_pd_ensemble(rng, pick_dim(cfg, rng), pick_n(cfg, rng), cfg.cond_max, cfg.tol);
  constexpr int points = 13;
  SymMatrix prev = SymMatrix::zeros(ens.dim());
  TrialResult res;
  for (int j = 0; j < points; ++j) {
    const double mu = kLimitGridLo *
                      std::pow(kLimitGridHi / kLimitGridLo, static_cast<double>(j) / (points - 1));
    const SymMatrix r = resolvent_average(ens, MuParam(mu), cfg.tol);
    if (j > 0) {
      const GeCheck ge = loewner_ge(prev, r, cfg.tol);
      res.residual = std::max(res.residual, std::max(0.0, -ge.lambda_min));
      if (!ge.ok) res.ok = false;
    }
    prev = r;
  }
  return res;
}

TrialResult resolvent_concavity_trial(const SuiteConfig& cfg, Rng& rng) {
  const int dim = pick_dim(cfg, rng);
  const int n = pick_n(cfg, rng);
  const Vec weights = random_weights(rng, n);
  std::vector<SymMatrix> ma, mb;
  for (int i = 0; i < n; ++i) ma.push_back(random_spd(rng, dim, cfg.cond_max));
  for (int i = 0; i < n; ++i) mb.push_back(random_spd(rng, dim, cfg.cond_max));
  const double t = rng.uniform(0.05, 0.95);
  const std::vector<Vec> probes = random_probes(rng, dim, 3);
  return check_concavity_resolvent(Ensemble(std::move(ma), weights, cfg.tol),
                                   Ensemble(std::move(mb), weights, cfg.tol),
                                   MuParam(pick_mu(cfg, rng)), t, probes, cfg.tol);
}

TrialResult inverse_convexity_trial(const SuiteConfig& cfg, Rng& rng) {
  const int dim = pick_dim(cfg, rng);
  const double t = rng.uniform(0.05, 0.95);
  const std::vector<Vec> probes = random_probes(rng, dim, 3);
  return check_concavity_inverse(random_spd(rng, dim, cfg.cond_max),
                                 random_spd(rng, dim, cfg.cond_max), t, probes, cfg.tol);
}

TrialResult harmonic_concavity_trial(const SuiteConfig& cfg, Rng& rng) {
  const int n = pick_n(cfg, rng);
  const Vec weights = random_weights(rng, n);
  Vec xa(n), xb(n);
  for (int i = 0; i < n; ++i) xa[i] = rng.log_uniform(0.01, 100.0);
  for (int i = 0; i < n; ++i) xb[i] = rng.log_uniform(0.01, 100.0);
  return check_concavity_harmonic(ScalarTuple(std::move(xa), weights),
                                  ScalarTuple(std::move(xb), weights), cfg.tol);
}

TrialResult self_duality_trial(const SuiteConfig& cfg, Rng& rng) {
  const Ensemble ens =
      random_pd_ensemble(rng, pick_dim(cfg, rng), pick_n(cfg, rng), cfg.cond_max, cfg.tol);
  return check_self_duality(ens, MuParam(pick_mu(cfg, rng)), cfg.tol);
}

TrialResult dual_pair_trial(const SuiteConfig& cfg, Rng& rng) {
  const Ensemble ens =
      random_pd_ensemble(rng, pick_dim(cfg, rng), pick_n(cfg, rng), cfg.cond_max, cfg.tol);
  return check_dual_pair(ens, cfg.tol);
}

double tuple_spread(const ScalarTuple& t) {
  double lo = t.x(0), hi = t.x(0);
  for (int i = 1; i < t.count(); ++i) {
    lo = std::min(lo, t.x(i));
    hi = std::max(hi, t.x(i));
  }
  return (hi - lo) / (1.0 + hi);
}

TrialResult scalar_hra_trial(const SuiteConfig& cfg, Rng& rng) {
  const int n = pick_n(cfg, rng);
  const ScalarTuple t = random_positive_tuple(rng, n);
  const double h = scalar_harmonic_mean(t);
  const double r = scalar_resolvent_mean(t);
  const double a = scalar_arithmetic_mean(t);
  const double slack = cfg.tol.eq * (1.0 + std::abs(a));
  TrialResult res;
  res.residual = std::max({0.0, h - r, r - a});
  if (h > r + slack || r > a + slack) res.ok = false;

  // equality holds exactly on constant tuples and fails strictly off them
  const ScalarTuple constant(Vec(n, t.x(0)), t.weights());
  const double rc = scalar_resolvent_mean(constant);
  const double ac = scalar_arithmetic_mean(constant);
  if (std::abs(rc - ac) > slack) res.ok = false;
  if (tuple_spread(t) > kStrictSpread && !(a - r > 0.0)) res.ok = false;
  return res;
}

TrialResult scalar_self_duality_trial(const SuiteConfig& cfg, Rng& rng) {
  const ScalarTuple t = random_positive_tuple(rng, pick_n(cfg, rng));
  Vec inv(t.count());
  for (int i = 0; i < t.count(); ++i) inv[i] = 1.0 / t.x(i);
  const double lhs = 1.0 / scalar_resolvent_mean(t);
  const double rhs = scalar_resolvent_mean(ScalarTuple(std::move(inv), t.weights()));
  const double rel = std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
  return {rel <= cfg.tol.eq, rel};
}

TrialResult scalar_constant_trial(const SuiteConfig& cfg, Rng& rng, bool geometric) {
  const int n = pick_n(cfg, rng);
  const double x = rng.log_uniform(0.01, 100.0);
  const ScalarTuple t(Vec(n, x), random_weights(rng, n));
  const double m = geometric ? weighted_geometric_mean(t) : scalar_resolvent_mean(t);
  const double rel = std::abs(m - x) / (1.0 + x);
  return {rel <= cfg.tol.eq, rel};
}

TrialResult scalar_inverse_pairs_trial(const SuiteConfig& cfg, Rng& rng, bool geometric) {
  const int pairs = rng.uniform_int(1, std::max(1, cfg.n_max / 2));
  Vec xs;
  for (int i = 0; i < pairs; ++i) {
    const double x = rng.log_uniform(0.01, 100.0);
    xs.push_back(x);
    xs.push_back(1.0 / x);
  }
  const ScalarTuple t(std::move(xs), Vec(2 * pairs, 1.0 / (2.0 * pairs)));
  const double m = geometric ? weighted_geometric_mean(t) : scalar_resolvent_mean(t);
  const double err = std::abs(m - 1.0);
  return {err <= cfg.tol.eq * 100.0, err};
}

TrialResult scalar_concavity_trial(const SuiteConfig& cfg, Rng& rng, bool geometric) {
  const int n = pick_n(cfg, rng);
  const Vec weights = random_weights(rng, n);
  Vec xa(n), xb(n), mid(n);
  for (int i = 0; i < n; ++i) {
    xa[i] = rng.log_uniform(0.01, 100.0);
    xb[i] = rng.log_uniform(0.01, 100.0);
    mid[i] = 0.5 * (xa[i] + xb[i]);
  }
  const ScalarTuple ta(std::move(xa), weights), tb(std::move(xb), weights),
      tm(std::move(mid), weights);
  const auto mean = [&](const ScalarTuple& t) {
    return geometric ? weighted_geometric_mean(t) : scalar_resolvent_mean(t);
  };
  const double gap = 0.5 * mean(ta) + 0.5 * mean(tb) - mean(tm);
  return {gap <= cfg.tol.eq * (1.0 + std::abs(mean(tm))), std::max(0.0, gap)};
}

TrialResult scalar_monotonicity_trial(const SuiteConfig& cfg, Rng& rng, bool geometric) {
  const int n = pick_n(cfg, rng);
  const Vec weights = random_weights(rng, n);
  Vec lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = rng.log_uniform(0.01, 100.0);
    hi[i] = lo[i] + (rng.uniform() < 0.3 ? 0.0 : rng.log_uniform(0.001, 10.0));
  }
  const ScalarTuple tl(std::move(lo), weights), th(std::move(hi), weights);
  const auto mean = [&](const ScalarTuple& t) {
    return geometric ? weighted_geometric_mean(t) : scalar_resolvent_mean(t);
  };
  const double gap = mean(tl) - mean(th);
  return {gap <= cfg.tol.eq * (1.0 + std::abs(mean(th))), std::max(0.0, gap)};
}

TrialResult scalar_hga_trial(const SuiteConfig& cfg, Rng& rng) {
  const int n = pick_n(cfg, rng);
  const ScalarTuple t = random_positive_tuple(rng, n);
  const double h = scalar_harmonic_mean(t);
  const double g = weighted_geometric_mean(t);
  const double a = scalar_arithmetic_mean(t);
  const double slack = cfg.tol.eq * (1.0 + std::abs(a));
  TrialResult res;
  res.residual = std::max({0.0, h - g, g - a});
  if (h > g + slack || g > a + slack) res.ok = false;
  const ScalarTuple constant(Vec(n, t.x(0)), t.weights());
  if (std::abs(weighted_geometric_mean(constant) - scalar_arithmetic_mean(constant)) > slack)
    res.ok = false;
  if (tuple_spread(t) > kStrictSpread && !(a - g > 0.0)) res.ok = false;
  return res;
}

TrialResult geometric_self_duality_trial(const SuiteConfig& cfg, Rng& rng) {
  const ScalarTuple t = random_positive_tuple(rng, pick_n(cfg, rng));
  Vec inv(t.count());
  for (int i = 0; i < t.count(); ++i) inv[i] = 1.0 / t.x(i);
  const double lhs = 1.0 / weighted_geometric_mean(t);
  const double rhs = weighted_geometric_mean(ScalarTuple(std::move(inv), t.weights()));
  const double rel = std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
  return {rel <= cfg.tol.eq, rel};
}

TrialResult noncomparability_trial(const SuiteConfig& cfg, Rng& rng, int trial) {
  if (trial == 0) {
    const ScalarTuple t({0.0, 1.0}, {0.5, 0.5});
    return {compare_resolvent_geometric(t, cfg.tol) == MeanOrder::RGreater, 0.0};
  }
  if (trial == 1) {
    const ScalarTuple t({9.0, 1.0}, {0.5, 0.5});
    return {compare_resolvent_geometric(t, cfg.tol) == MeanOrder::GGreater, 0.0};
  }
  // random draws must classify consistently with the recomputed sign
  const ScalarTuple t = random_positive_tuple(rng, pick_n(cfg, rng));
  const MeanOrder order = compare_resolvent_geometric(t, cfg.tol);
  const double r = scalar_resolvent_mean(t);
  const double g = weighted_geometric_mean(t);
  bool ok = true;
  if (order == MeanOrder::RGreater && !(r > g)) ok = false;
  if (order == MeanOrder::GGreater && !(g > r)) ok = false;
  return {ok, 0.0};
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"resolvent-identity",
       [](const SuiteConfig& c, Rng& r, int) { return identity_trial(c, r, false); }},
      {"yosida-identity",
       [](const SuiteConfig& c, Rng& r, int) { return identity_trial(c, r, true); }},
      {"inverse-pair-identity",
       [](const SuiteConfig& c, Rng& r, int) { return inverse_pair_trial(c, r); }},
      {"constant-ensemble",
       [](const SuiteConfig& c, Rng& r, int) { return constant_ensemble_trial(c, r); }},
      {"loewner-monotonicity",
       [](const SuiteConfig& c, Rng& r, int) { return monotonicity_trial(c, r, false); }},
      {"loewner-monotonicity-strict",
       [](const SuiteConfig& c, Rng& r, int) { return monotonicity_trial(c, r, true); }},
      {"psd-closure",
       [](const SuiteConfig& c, Rng& r, int) { return closure_trial(c, r, false); }},
      {"pd-closure",
       [](const SuiteConfig& c, Rng& r, int) { return closure_trial(c, r, true); }},
      {"recursion-consistency",
       [](const SuiteConfig& c, Rng& r, int) { return recursion_trial(c, r); }},
      {"prox-conjugate-duality",
       [](const SuiteConfig& c, Rng& r, int) { return fenchel_trial(c, r); }},
      {"function-sandwich",
       [](const SuiteConfig& c, Rng& r, int) { return function_sandwich_trial(c, r); }},
      {"mu-value-monotonicity",
       [](const SuiteConfig& c, Rng& r, int) { return mu_value_monotonicity_trial(c, r); }},
      {"prox-closed-vs-kkt",
       [](const SuiteConfig& c, Rng& r, int) { return prox_oracle_trial(c, r); }},
      {"matrix-sandwich",
       [](const SuiteConfig& c, Rng& r, int) { return matrix_sandwich_trial(c, r); }},
      {"limit-arithmetic",
       [](const SuiteConfig& c, Rng& r, int) { return limit_trial(c, r, false); }},
      {"limit-harmonic",
       [](const SuiteConfig& c, Rng& r, int) { return limit_trial(c, r, true); }},
      {"sweep-loewner-chain",
       [](const SuiteConfig& c, Rng& r, int) { return sweep_chain_trial(c, r); }},
      {"resolvent-concavity",
       [](const SuiteConfig& c, Rng& r, int) { return resolvent_concavity_trial(c, r); }},
      {"inverse-convexity",
       [](const SuiteConfig& c, Rng& r, int) { return inverse_convexity_trial(c, r); }},
      {"harmonic-concavity",
       [](const SuiteConfig& c, Rng& r, int) { return harmonic_concavity_trial(c, r); }},
      {"self-duality",
       [](const SuiteConfig& c, Rng& r, int) { return self_duality_trial(c, r); }},
      {"harmonic-arithmetic-duality",
       [](const SuiteConfig& c, Rng& r, int) { return dual_pair_trial(c, r); }},
      {"scalar-hra-inequality",
       [](const SuiteConfig& c, Rng& r, int) { return scalar_hra_trial(c, r); }},
      {"scalar-self-duality",
       [](const SuiteConfig& c, Rng& r, int) { return scalar_self_duality_trial(c, r); }},
      {"scalar-constant-tuple",
       [](const SuiteConfig& c, Rng& r, int) { return scalar_constant_trial(c, r, false); }},
      {"scalar-inverse-pair-mean",
       [](const SuiteConfig& c, Rng& r, int) { return scalar_inverse_pairs_trial(c, r, false); }},
      {"scalar-resolvent-concavity",
       [](const SuiteConfig& c, Rng& r, int) { return scalar_concavity_trial(c, r, false); }},
      {"scalar-resolvent-monotonicity",
       [](const SuiteConfig& c, Rng& r, int) { return scalar_monotonicity_trial(c, r, false); }},
      {"scalar-hga-inequality",
       [](const SuiteConfig& c, Rng& r, int) { return scalar_hga_trial(c, r); }},
      {"geometric-self-duality",
       [](const SuiteConfig& c, Rng& r, int) { return geometric_self_duality_trial(c, r); }},
      {"geometric-constant-tuple",
       [](const SuiteConfig& c, Rng& r, int) { return scalar_constant_trial(c, r, true); }},
      {"geometric-inverse-pair-mean",
       [](const SuiteConfig& c, Rng& r, int) { return scalar_inverse_pairs_trial(c, r, true); }},
      {"geometric-concavity",
       [](const SuiteConfig& c, Rng& r, int) { return scalar_concavity_trial(c, r, true); }},
      {"geometric-monotonicity",
       [](const SuiteConfig& c, Rng& r, int) { return scalar_monotonicity_trial(c, r, true); }},
      {"mean-noncomparability",
       [](const SuiteConfig& c, Rng& r, int t) { return noncomparability_trial(c, r, t); }},
  };
  return defs;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const CheckDef& d : registry()) names.emplace_back(d.name);
  return names;
}

CheckReport run_suite(const SuiteConfig& cfg, const std::string& suite) {
  cfg.validate();
  CheckReport report;
  report.suite = suite;
  report.config = cfg;

  bool found = false;
  const auto& defs = registry();
  for (std::size_t ord = 0; ord < defs.size(); ++ord) {
    if (suite != "all" && suite != defs[ord].name) continue;
    found = true;
    PropertyRecord rec;
    rec.name = defs[ord].name;
    rec.trials = cfg.trials;
    for (int t = 0; t < cfg.trials; ++t) {
      Rng rng = Rng::substream(cfg.seed, ord, static_cast<std::uint64_t>(t));
      TrialResult res;
      try {
        res = defs[ord].fn(cfg, rng, t);
      } catch (const Error&) {
        res.ok = false;
        res.residual = std::numeric_limits<double>::max();
      }
      if (!res.ok) ++rec.failures;
      if (res.residual > rec.worst_residual) {
        rec.worst_residual = res.residual;
        rec.worst_seed_offset = static_cast<std::uint64_t>(t);
      }
    }
    report.records.push_back(std::move(rec));
  }
  if (!found) fail(Errc::UnknownName, "unknown suite: " + suite);
  return report;
}

}  // namespace mm

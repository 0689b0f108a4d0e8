#include "core/random_instances.hpp"

#include <cmath>

#include "core/prox_average.hpp"

namespace mm {
namespace {

// Random orthogonal matrix: Gaussian columns through modified Gram-Schmidt,
// redrawing any column that collapses numerically.
std::vector<double> random_orthogonal(Rng& rng, int n) {
  std::vector<double> q(static_cast<std::size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    Vec v(n);
    for (;;) {
      for (int i = 0; i < n; ++i) v[i] = rng.normal();
      for (int j = 0; j < k; ++j) {
        double proj = 0.0;
        for (int i = 0; i < n; ++i) proj += q[static_cast<std::size_t>(i) * n + j] * v[i];
        for (int i = 0; i < n; ++i) v[i] -= proj * q[static_cast<std::size_t>(i) * n + j];
      }
      const double nrm = norm2(v);
      if (nrm > 1e-8) {
        for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i) * n + k] = v[i] / nrm;
        break;
      }
    }
  }
  return q;
}

SymMatrix from_orthogonal(const std::vector<double>& q, const Vec& eigenvalues, int n) {
  return SymMatrix::build(n, [&](int i, int j) {
    double s = 0.0;
    for (int k = 0; k < n; ++k)
      s += eigenvalues[k] * q[static_cast<std::size_t>(i) * n + k] *
           q[static_cast<std::size_t>(j) * n + k];
    return s;
  });
}

}  // namespace

SymMatrix random_spd(Rng& rng, int dim, double cond_target) {
  if (dim < 1) fail(Errc::BadArgument, "random_spd needs dim >= 1");
  if (!(cond_target >= 1.0)) fail(Errc::BadArgument, "random_spd needs cond_target >= 1");
  if (cond_target == 1.0) return SymMatrix::identity(dim);
  const std::vector<double> q = random_orthogonal(rng, dim);
  const double half = std::sqrt(cond_target);
  Vec eigenvalues(dim);
  for (int k = 0; k < dim; ++k) eigenvalues[k] = rng.log_uniform(1.0 / half, half);
  return from_orthogonal(q, eigenvalues, dim);
}

SymMatrix random_spd(std::uint64_t seed, int dim, double cond_target) {
  Rng rng(seed);
  return random_spd(rng, dim, cond_target);
}

SymMatrix random_psd(Rng& rng, int dim, double cond_target, int zero_count) {
  if (zero_count <= 0) return random_spd(rng, dim, cond_target);
  if (zero_count >= dim) return SymMatrix::zeros(dim);
  const std::vector<double> q = random_orthogonal(rng, dim);
  const double half = std::sqrt(std::max(cond_target, 1.0));
  Vec eigenvalues(dim, 0.0);
  for (int k = zero_count; k < dim; ++k) eigenvalues[k] = rng.log_uniform(1.0 / half, half);
  return from_orthogonal(q, eigenvalues, dim);
}

Vec random_unit_vec(Rng& rng, int dim) {
  Vec v(dim);
  for (;;) {
    for (int i = 0; i < dim; ++i) v[i] = rng.normal();
    const double nrm = norm2(v);
    if (nrm > 1e-8) {
      for (double& x : v) x /= nrm;
      return v;
    }
  }
}

Vec random_weights(Rng& rng, int n) {
  Vec w(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    w[i] = rng.uniform(0.5, 1.5);
    sum += w[i];
  }
  for (double& v : w) v /= sum;
  return w;
}

Ensemble random_pd_ensemble(Rng& rng, int dim, int n, double cond_max, const Tolerances& tol) {
  std::vector<SymMatrix> mats;
  mats.reserve(n);
  for (int i = 0; i < n; ++i) mats.push_back(random_spd(rng, dim, cond_max));
  return Ensemble(std::move(mats), random_weights(rng, n), tol);
}

Ensemble random_psd_ensemble(Rng& rng, int dim, int n, double cond_max, const Tolerances& tol) {
  std::vector<SymMatrix> mats;
  mats.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int zero_count = rng.uniform_int(0, dim / 2);
    mats.push_back(random_psd(rng, dim, cond_max, zero_count));
  }
  return Ensemble(std::move(mats), random_weights(rng, n), tol);
}

ProxEnsemble random_linquad_ensemble(Rng& rng, int dim, int n, double cond_max, double mu,
                                     bool pd, const Tolerances& tol) {
  std::vector<LinQuad> funcs;
  funcs.reserve(n);
  for (int i = 0; i < n; ++i) {
    SymMatrix a = pd ? random_spd(rng, dim, cond_max)
                     : random_psd(rng, dim, cond_max, rng.uniform_int(0, dim / 2));
    Vec b(dim);
    for (int k = 0; k < dim; ++k) b[k] = rng.normal();
    funcs.emplace_back(std::move(a), std::move(b), rng.normal(), tol);
  }
  return ProxEnsemble(std::move(funcs), random_weights(rng, n), MuParam(mu), tol);
}

ScalarTuple random_positive_tuple(Rng& rng, int n) {
  Vec xs(n);
  for (int i = 0; i < n; ++i) xs[i] = rng.log_uniform(0.01, 100.0);
  return ScalarTuple(std::move(xs), random_weights(rng, n));
}

}  // namespace mm

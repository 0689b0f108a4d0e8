#include "core/prox_average.hpp"

#include <algorithm>
#include <cmath>

#include "core/linsolve.hpp"

namespace mm {

ProxEnsemble::ProxEnsemble(std::vector<LinQuad> funcs, Vec weights, MuParam mu,
                           const Tolerances& tol)
    : funcs_(std::move(funcs)), weights_(normalize_weights(std::move(weights))), mu_(mu.value) {
  tol.validate();
  if (funcs_.empty()) fail(Errc::BadArgument, "prox ensemble needs at least one function");
  if (weights_.size() != funcs_.size())
    fail(Errc::DimMismatch, "prox ensemble needs one weight per function");
  const int n = funcs_.front().dim();
  for (const LinQuad& f : funcs_)
    if (f.dim() != n) fail(Errc::DimMismatch, "prox ensemble functions must share one dimension");
}

ProxEnsemble ProxEnsemble::with_mu(MuParam mu) const {
  return ProxEnsemble(funcs_, weights_, mu);
}

LinQuad prox_average_closed(const ProxEnsemble& pens, const Tolerances& tol) {
  tol.validate();
  const int dim = pens.dim();
  const double shift = 1.0 / pens.mu();

  SymMatrix m_mat = SymMatrix::zeros(dim);
  Vec m_vec(dim, 0.0);
  double carried = 0.0;  // sum_i w_i (q_{(A_i + shift Id)^-1}(b_i) - r_i)
  std::vector<SymMatrix> quads;
  quads.reserve(pens.count());
  for (int i = 0; i < pens.count(); ++i) {
    const LinQuad& f = pens.func(i);
    quads.push_back(f.quad());
    const double w = pens.weight(i);
    const Spectrum sp = eigendecompose(f.quad(), tol);
    const SymMatrix inv_i = sp.map([&](double a) { return 1.0 / (a + shift); });
    const Vec u = inv_i.apply(f.linear());
    m_mat.add_scaled(inv_i, w);
    for (int k = 0; k < dim; ++k) m_vec[k] += w * u[k];
    carried += w * (0.5 * dot(u, f.linear()) - f.constant());
  }

  const SymMatrix quad_part = resolvent_average(Ensemble(quads, pens.weights(), tol),
                                                MuParam(pens.mu()), tol);
  const SymMatrix m_inv = inverse(m_mat, tol);
  Vec b_out = m_inv.apply(m_vec);
  const double r_out = 0.5 * dot(b_out, m_vec) - carried;
  return LinQuad(quad_part, std::move(b_out), r_out, tol);
}

double prox_average_value(const ProxEnsemble& pens, std::span<const double> x, ProxRep rep,
                          const Tolerances& tol) {
  tol.validate();
  const int dim = pens.dim();
  const int n = pens.count();
  if (static_cast<int>(x.size()) != dim)
    fail(Errc::DimMismatch, "prox evaluation point has wrong dimension");
  const double mu = pens.mu();
  const double shift = 1.0 / mu;
  const int m = (n + 1) * dim;  // stacked blocks plus one multiplier block

  std::vector<double> kkt(static_cast<std::size_t>(m) * m, 0.0);
  Vec rhs(m, 0.0);
  auto at = [&](int r, int c) -> double& { return kkt[static_cast<std::size_t>(r) * m + c]; };

  if (rep == ProxRep::Split) {
    // minimize sum_i [ q_{A_i + shift Id}(x_i)/w_i + <b_i, x_i> + w_i r_i ]
    // subject to sum_i x_i = x; value then subtracts shift * j(x).
    for (int i = 0; i < n; ++i) {
      const LinQuad& f = pens.func(i);
      const double w = pens.weight(i);
      for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b)
          at(i * dim + a, i * dim + b) = (f.quad()(a, b) + (a == b ? shift : 0.0)) / w;
        at(n * dim + a, i * dim + a) = 1.0;
        at(i * dim + a, n * dim + a) = 1.0;
        rhs[i * dim + a] = -f.linear()[a];
      }
    }
    for (int a = 0; a < dim; ++a) rhs[n * dim + a] = x[a];

    const Vec z = lu_solve(std::move(kkt), m, std::move(rhs));
    double value = -shift * 0.5 * dot(x, x);
    for (int i = 0; i < n; ++i) {
      const LinQuad& f = pens.func(i);
      const double w = pens.weight(i);
      const std::span<const double> xi(z.data() + static_cast<std::size_t>(i) * dim, dim);
      value += (f.quad().quad_form(xi) + shift * 0.5 * dot(xi, xi)) / w + dot(f.linear(), xi) +
               w * f.constant();
    }
    return value;
  }

  // Barycentric: minimize sum_i w_i f_i(y_i) + (1/(4 mu)) sum_{ij} w_i w_j |y_i - y_j|^2
  // subject to sum_i w_i y_i = x.
  for (int i = 0; i < n; ++i) {
    const LinQuad& f = pens.func(i);
    const double wi = pens.weight(i);
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) at(i * dim + a, i * dim + b) = wi * f.quad()(a, b);
      at(i * dim + a, i * dim + a) += wi * (1.0 - wi) / mu;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        at(i * dim + a, j * dim + a) = -wi * pens.weight(j) / mu;
      }
      at(n * dim + a, i * dim + a) = wi;
      at(i * dim + a, n * dim + a) = wi;
      rhs[i * dim + a] = -wi * f.linear()[a];
    }
  }
  for (int a = 0; a < dim; ++a) rhs[n * dim + a] = x[a];

  const Vec z = lu_solve(std::move(kkt), m, std::move(rhs));
  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    const std::span<const double> yi(z.data() + static_cast<std::size_t>(i) * dim, dim);
    value += pens.weight(i) * pens.func(i).eval(yi);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::span<const double> yi(z.data() + static_cast<std::size_t>(i) * dim, dim);
      const std::span<const double> yj(z.data() + static_cast<std::size_t>(j) * dim, dim);
      const double d = dist2(yi, yj);
      value += 2.0 * (pens.weight(i) * pens.weight(j) * d * d) / (4.0 * mu);
    }
  return value;
}

FenchelCheck fenchel_selfdual_check(const ProxEnsemble& pens, const Tolerances& tol) {
  const LinQuad closed = prox_average_closed(pens, tol);
  const LinQuad left = conjugate_linquad(closed, tol);

  std::vector<LinQuad> conj;
  conj.reserve(pens.count());
  for (const LinQuad& f : pens.funcs()) conj.push_back(conjugate_linquad(f, tol));
  const ProxEnsemble dual(std::move(conj), pens.weights(), MuParam(1.0 / pens.mu()), tol);
  const LinQuad right = prox_average_closed(dual, tol);

  const double quad_diff = frobenius_distance(left.quad(), right.quad());
  const double lin_diff = dist2(left.linear(), right.linear());
  const double const_diff = std::abs(left.constant() - right.constant());
  const double residual = std::max({quad_diff, lin_diff, const_diff});
  const double scale = 1.0 +
                       std::max(left.quad().frobenius_norm(), right.quad().frobenius_norm()) +
                       std::max(norm2(left.linear()), norm2(right.linear())) +
                       std::max(std::abs(left.constant()), std::abs(right.constant()));
  return {residual, scale};
}

bool mu_monotonicity_check(const ProxEnsemble& pens, MuParam mu_lo, MuParam mu_hi,
                           std::span<const double> x, const Tolerances& tol) {
  if (!(mu_lo.value < mu_hi.value))
    fail(Errc::BadArgument, "mu monotonicity check needs mu_lo < mu_hi");
  const double lo_val = prox_average_closed(pens.with_mu(mu_lo), tol).eval(x);
  const double hi_val = prox_average_closed(pens.with_mu(mu_hi), tol).eval(x);
  return lo_val >= hi_val - tol.eq * (1.0 + std::max(std::abs(lo_val), std::abs(hi_val)));
}

}  // namespace mm

#include "core/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mm {
namespace {

constexpr int kMaxSweeps = 30;

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = a[static_cast<std::size_t>(i) * n + j];
      s += 2.0 * v * v;
    }
  return std::sqrt(s);
}

}  // namespace

const char* to_string(LoewnerOrdering o) {
  switch (o) {
    case LoewnerOrdering::Equal: return "Equal";
    case LoewnerOrdering::StrictLess: return "StrictLess";
    case LoewnerOrdering::LessEq: return "LessEq";
    case LoewnerOrdering::StrictGreater: return "StrictGreater";
    case LoewnerOrdering::GreaterEq: return "GreaterEq";
    case LoewnerOrdering::Incomparable: return "Incomparable";
  }
  return "?";
}

bool loewner_at_least(LoewnerOrdering o) {
  return o == LoewnerOrdering::GreaterEq || o == LoewnerOrdering::StrictGreater ||
         o == LoewnerOrdering::Equal;
}

bool loewner_at_most(LoewnerOrdering o) {
  return o == LoewnerOrdering::LessEq || o == LoewnerOrdering::StrictLess ||
         o == LoewnerOrdering::Equal;
}

Spectrum eigendecompose(const SymMatrix& m, const Tolerances& tol) {
  tol.validate();
  const int n = m.dim();
  std::vector<double> a(m.flat().begin(), m.flat().end());
  std::vector<double> q(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i) * n + i] = 1.0;

  const double fro = m.frobenius_norm();
  const double thresh = tol.spec * fro;
  if (fro > 0.0) {
    int sweep = 0;
    while (off_diagonal_norm(a, n) > thresh) {
      if (++sweep > kMaxSweeps)
        fail(Errc::NoConvergence, "eigendecomposition did not converge within the sweep budget");
      for (int p = 0; p < n - 1; ++p) {
        for (int r = p + 1; r < n; ++r) {
          const double apr = a[static_cast<std::size_t>(p) * n + r];
          if (apr == 0.0) continue;
          const double app = a[static_cast<std::size_t>(p) * n + p];
          const double arr = a[static_cast<std::size_t>(r) * n + r];
          const double tau = (arr - app) / (2.0 * apr);
          double t;
          if (std::abs(tau) > 1e10) {
            t = 0.5 / tau;  // asymptotic branch avoids tau*tau overflow
          } else {
            const double sgn = tau >= 0.0 ? 1.0 : -1.0;
            t = sgn / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
          }
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;

          for (int k = 0; k < n; ++k) {
            if (k == p || k == r) continue;
            const double akp = a[static_cast<std::size_t>(k) * n + p];
            const double akr = a[static_cast<std::size_t>(k) * n + r];
            const double np = c * akp - s * akr;
            const double nr = s * akp + c * akr;
            a[static_cast<std::size_t>(k) * n + p] = np;
            a[static_cast<std::size_t>(p) * n + k] = np;
            a[static_cast<std::size_t>(k) * n + r] = nr;
            a[static_cast<std::size_t>(r) * n + k] = nr;
          }
          a[static_cast<std::size_t>(p) * n + p] = app - t * apr;
          a[static_cast<std::size_t>(r) * n + r] = arr + t * apr;
          a[static_cast<std::size_t>(p) * n + r] = 0.0;
          a[static_cast<std::size_t>(r) * n + p] = 0.0;

          for (int k = 0; k < n; ++k) {
            const double qkp = q[static_cast<std::size_t>(k) * n + p];
            const double qkr = q[static_cast<std::size_t>(k) * n + r];
            q[static_cast<std::size_t>(k) * n + p] = c * qkp - s * qkr;
            q[static_cast<std::size_t>(k) * n + r] = s * qkp + c * qkr;
          }
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a[static_cast<std::size_t>(i) * n + i] < a[static_cast<std::size_t>(j) * n + j];
  });

  Spectrum sp;
  sp.dim = n;
  sp.eigenvalues.resize(n);
  sp.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    const int src = order[k];
    sp.eigenvalues[k] = a[static_cast<std::size_t>(src) * n + src];
    for (int i = 0; i < n; ++i)
      sp.vectors[static_cast<std::size_t>(i) * n + k] = q[static_cast<std::size_t>(i) * n + src];
  }
  return sp;
}

bool is_psd(const SymMatrix& m, const Tolerances& tol) {
  const Spectrum sp = eigendecompose(m, tol);
  return sp.lambda_min() >= -tol.psd * (1.0 + m.frobenius_norm());
}

bool is_pd(const SymMatrix& m, const Tolerances& tol) {
  const Spectrum sp = eigendecompose(m, tol);
  return sp.lambda_min() >= tol.psd * (1.0 + m.frobenius_norm());
}

LoewnerOrdering loewner_cmp(const SymMatrix& x, const SymMatrix& y, const Tolerances& tol) {
  require_same_dim(x, y);
  const SymMatrix d = x - y;
  if (d.frobenius_norm() <= tol.psd * (1.0 + x.frobenius_norm() + y.frobenius_norm()))
    return LoewnerOrdering::Equal;
  const Spectrum sp = eigendecompose(d, tol);
  const double band = tol.psd * (1.0 + d.frobenius_norm());
  const double lo = sp.lambda_min();
  const double hi = sp.lambda_max();
  if (lo >= band) return LoewnerOrdering::StrictGreater;
  if (lo >= -band) return LoewnerOrdering::GreaterEq;
  if (hi <= -band) return LoewnerOrdering::StrictLess;
  if (hi <= band) return LoewnerOrdering::LessEq;
  return LoewnerOrdering::Incomparable;
}

SymMatrix inverse(const SymMatrix& m, const Tolerances& tol) {
  const Spectrum sp = eigendecompose(m, tol);
  if (sp.lambda_min() < tol.psd * (1.0 + m.frobenius_norm()))
    fail(Errc::NotPositiveDefinite, "inverse requires a positive definite matrix");
  return sp.map([](double a) { return 1.0 / a; });
}

SymMatrix sqrt_psd(const SymMatrix& m, const Tolerances& tol) {
  const Spectrum sp = eigendecompose(m, tol);
  const double band = tol.psd * (1.0 + m.frobenius_norm());
  if (sp.lambda_min() < -band)
    fail(Errc::NotPositiveSemidefinite, "sqrt_psd requires a positive semidefinite matrix");
  return sp.map([](double a) { return a > 0.0 ? std::sqrt(a) : 0.0; });
}

double condition_number(const Spectrum& s) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double v : s.eigenvalues) {
    lo = std::min(lo, std::abs(v));
    hi = std::max(hi, std::abs(v));
  }
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

}  // namespace mm

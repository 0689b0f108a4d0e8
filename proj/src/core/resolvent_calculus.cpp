#include "core/resolvent_calculus.hpp"

namespace mm {
namespace {

Spectrum psd_spectrum(const SymMatrix& a, const Tolerances& tol, const char* op) {
  const Spectrum sp = eigendecompose(a, tol);
  if (sp.lambda_min() < -tol.psd * (1.0 + a.frobenius_norm()))
    fail(Errc::NotPositiveSemidefinite, std::string(op) + " requires a PSD matrix");
  return sp;
}

}  // namespace

SymMatrix resolvent(const SymMatrix& a, const Tolerances& tol) {
  return psd_spectrum(a, tol, "resolvent").map([](double v) { return 1.0 / (1.0 + v); });
}

SymMatrix yosida(const SymMatrix& a, MuParam mu, const Tolerances& tol) {
  const double m = mu.value;
  return psd_spectrum(a, tol, "yosida").map([m](double v) { return v / (1.0 + m * v); });
}

double resolvent_identity_residual(const Ensemble& ens, MuParam mu, const Tolerances& tol) {
  const double m = mu.value;
  const SymMatrix r = resolvent_average(ens, mu, tol);
  const SymMatrix lhs =
      eigendecompose(r, tol).map([m](double v) { return 1.0 / (1.0 + m * v); });
  SymMatrix rhs = SymMatrix::zeros(ens.dim());
  for (int i = 0; i < ens.count(); ++i) {
    const Spectrum sp = eigendecompose(ens.matrix(i), tol);
    rhs.add_scaled(sp.map([m](double v) { return 1.0 / (1.0 + m * v); }), ens.weight(i));
  }
  return frobenius_distance(lhs, rhs);
}

double yosida_identity_residual(const Ensemble& ens, MuParam mu, const Tolerances& tol) {
  const double m = mu.value;
  const SymMatrix r = resolvent_average(ens, mu, tol);
  const SymMatrix lhs = eigendecompose(r, tol).map([m](double v) { return v / (1.0 + m * v); });
  SymMatrix rhs = SymMatrix::zeros(ens.dim());
  for (int i = 0; i < ens.count(); ++i) {
    const Spectrum sp = eigendecompose(ens.matrix(i), tol);
    rhs.add_scaled(sp.map([m](double v) { return v / (1.0 + m * v); }), ens.weight(i));
  }
  return frobenius_distance(lhs, rhs);
}

}  // namespace mm

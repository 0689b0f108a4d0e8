#pragma once

#include <vector>

#include "core/sym_matrix.hpp"

namespace mm {

/// Eigendecomposition of a SymMatrix: eigenvalues in nondecreasing order with
/// matching orthonormal eigenvector columns.
struct Spectrum {
  int dim = 0;
  Vec eigenvalues;              // ascending
  std::vector<double> vectors;  // row-major dim x dim; column k pairs with eigenvalues[k]

  double vec(int i, int k) const { return vectors[static_cast<std::size_t>(i) * dim + k]; }
  double lambda_min() const { return eigenvalues.front(); }
  double lambda_max() const { return eigenvalues.back(); }

  /// Rebuilds Q f(Lambda) Q^T; exactly symmetric by construction.
  template <class F>
  SymMatrix map(F&& f) const {
    Vec fl(dim);
    for (int k = 0; k < dim; ++k) fl[k] = f(eigenvalues[k]);
    return SymMatrix::build(dim, [&](int i, int j) {
      double s = 0.0;
      for (int k = 0; k < dim; ++k) s += fl[k] * vec(i, k) * vec(j, k);
      return s;
    });
  }
};

/// Outcome of comparing two symmetric matrices in the Loewner order.
enum class LoewnerOrdering { Equal, StrictLess, LessEq, StrictGreater, GreaterEq, Incomparable };

const char* to_string(LoewnerOrdering o);

/// True when o says "left >= right" (GreaterEq, StrictGreater or Equal).
bool loewner_at_least(LoewnerOrdering o);
/// True when o says "left <= right".
bool loewner_at_most(LoewnerOrdering o);

/// Cyclic Jacobi rotations in a fixed sweep order, at most 30 full sweeps;
/// converged when the off-diagonal Frobenius norm falls below spec * ||M||_F.
Spectrum eigendecompose(const SymMatrix& m, const Tolerances& tol = {});

/// lambda_min >= -psd * (1 + ||M||_F); the dead-band makes boundary cases PSD.
bool is_psd(const SymMatrix& m, const Tolerances& tol = {});
/// lambda_min >= +psd * (1 + ||M||_F); values inside the band are PSD, not PD.
bool is_pd(const SymMatrix& m, const Tolerances& tol = {});

LoewnerOrdering loewner_cmp(const SymMatrix& x, const SymMatrix& y, const Tolerances& tol = {});

/// Spectral inversion; requires is_pd.
SymMatrix inverse(const SymMatrix& m, const Tolerances& tol = {});
/// Spectral square root; requires is_psd. Dead-band negatives clamp to zero.
SymMatrix sqrt_psd(const SymMatrix& m, const Tolerances& tol = {});

/// |lambda|_max / |lambda|_min; infinity when the smallest magnitude is zero.
double condition_number(const Spectrum& s);

}  // namespace mm

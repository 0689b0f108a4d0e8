#pragma once

#include "core/spectral.hpp"

namespace mm {

/// Linear-quadratic convex function f(x) = 0.5 <Ax, x> + <b, x> + r with
/// PSD quadratic part.
class LinQuad {
 public:
  LinQuad(SymMatrix a, Vec b, double r, const Tolerances& tol = {});

  int dim() const { return a_.dim(); }
  const SymMatrix& quad() const { return a_; }
  const Vec& linear() const { return b_; }
  double constant() const { return r_; }

  double eval(std::span<const double> x) const;
  /// A x + b.
  Vec gradient(std::span<const double> x) const;

 private:
  SymMatrix a_;
  Vec b_;
  double r_;
};

/// Fenchel conjugate of a linear-quadratic function with PD quadratic part:
/// (A, b, r) -> (A^-1, -A^-1 b, q_{A^-1}(b) - r).
LinQuad conjugate_linquad(const LinQuad& f, const Tolerances& tol = {});

/// sum_i w_i f_i, coefficientwise (weights used as given).
LinQuad weighted_sum_linquad(const std::vector<LinQuad>& funcs, std::span<const double> weights,
                             const Tolerances& tol = {});

}  // namespace mm

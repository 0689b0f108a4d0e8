#pragma once

#include <span>
#include <vector>

#include "core/errors.hpp"
#include "core/tolerances.hpp"
#include "core/vec.hpp"

namespace mm {

/// Dense real symmetric matrix. The (i,j) and (j,i) slots always hold the
/// same double, so symmetry is exact by construction and never degrades
/// through downstream arithmetic.
class SymMatrix {
 public:
  static SymMatrix zeros(int dim);
  static SymMatrix identity(int dim);
  static SymMatrix diagonal(std::span<const double> d);

  /// Validates shape and finiteness, rejects inputs whose asymmetry exceeds
  /// spec * (1 + max|entry|), then stores (M + M^T) / 2.
  static SymMatrix from_rows(const std::vector<Vec>& rows, const Tolerances& tol = {});
  static SymMatrix from_flat(int dim, std::span<const double> row_major,
                             const Tolerances& tol = {});

  /// Fills entries from f(i, j) for i <= j, mirroring into the lower triangle.
  template <class F>
  static SymMatrix build(int dim, F&& f) {
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        const double v = f(i, j);
        m.a_[static_cast<std::size_t>(i) * dim + j] = v;
        m.a_[static_cast<std::size_t>(j) * dim + i] = v;
      }
    return m;
  }

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  void set(int i, int j, double v) {
    a_[static_cast<std::size_t>(i) * dim_ + j] = v;
    a_[static_cast<std::size_t>(j) * dim_ + i] = v;
  }
  std::span<const double> flat() const { return a_; }

  double frobenius_norm() const;
  double max_abs() const;
  Vec apply(std::span<const double> x) const;
  /// q_M(x) = 0.5 <Mx, x>.
  double quad_form(std::span<const double> x) const;

  SymMatrix& add_scaled(const SymMatrix& other, double factor);
  SymMatrix& operator+=(const SymMatrix& o) { return add_scaled(o, 1.0); }
  SymMatrix& operator-=(const SymMatrix& o) { return add_scaled(o, -1.0); }
  SymMatrix& operator*=(double c);

  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(SymMatrix a, double c) { return a *= c; }
  friend SymMatrix operator*(double c, SymMatrix a) { return a *= c; }

 private:
  explicit SymMatrix(int dim);

  int dim_ = 0;
  std::vector<double> a_;
};

/// Symmetric part (a b + b a) / 2 of a product of symmetric matrices.
SymMatrix symmetrized_product(const SymMatrix& a, const SymMatrix& b);
/// sym(s b s) for symmetric s and b.
SymMatrix congruence(const SymMatrix& s, const SymMatrix& b);
double frobenius_distance(const SymMatrix& a, const SymMatrix& b);
void require_same_dim(const SymMatrix& a, const SymMatrix& b);

}  // namespace mm

#include "core/sym_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace mm {
namespace {

void check_dim(int dim) {
  if (dim < 1) fail(Errc::BadArgument, "matrix dimension must be >= 1");
}

// General (non-symmetric) dense product into out, row-major.
void multiply(std::span<const double> a, std::span<const double> b, int n,
              std::vector<double>& out) {
  out.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j)
        out[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
    }
}

}  // namespace

SymMatrix::SymMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {}

SymMatrix SymMatrix::zeros(int dim) {
  check_dim(dim);
  return SymMatrix(dim);
}

SymMatrix SymMatrix::identity(int dim) {
  check_dim(dim);
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.a_[static_cast<std::size_t>(i) * dim + i] = 1.0;
  return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
  check_dim(static_cast<int>(d.size()));
  SymMatrix m(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.a_[i * d.size() + i] = d[i];
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<Vec>& rows, const Tolerances& tol) {
  tol.validate();
  const int n = static_cast<int>(rows.size());
  check_dim(n);
  for (const Vec& r : rows) {
    if (static_cast<int>(r.size()) != n) fail(Errc::DimMismatch, "matrix rows must be square");
    if (!all_finite(r)) fail(Errc::NonFinite, "matrix entries must be finite");
  }
  double max_abs = 0.0, max_asym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      max_abs = std::max(max_abs, std::abs(rows[i][j]));
      max_asym = std::max(max_asym, std::abs(rows[i][j] - rows[j][i]));
    }
  if (max_asym > tol.spec * (1.0 + max_abs))
    fail(Errc::AsymmetricInput, "input matrix is not symmetric within tolerance");
  return build(n, [&](int i, int j) { return 0.5 * (rows[i][j] + rows[j][i]); });
}

SymMatrix SymMatrix::from_flat(int dim, std::span<const double> row_major,
                               const Tolerances& tol) {
  check_dim(dim);
  if (row_major.size() != static_cast<std::size_t>(dim) * dim)
    fail(Errc::DimMismatch, "flat matrix data has wrong length");
  std::vector<Vec> rows(dim, Vec(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) rows[i][j] = row_major[static_cast<std::size_t>(i) * dim + j];
  return from_rows(rows, tol);
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

Vec SymMatrix::apply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) fail(Errc::DimMismatch, "apply: vector length mismatch");
  Vec y(dim_, 0.0);
  for (int i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (int j = 0; j < dim_; ++j) s += a_[static_cast<std::size_t>(i) * dim_ + j] * x[j];
    y[i] = s;
  }
  return y;
}

double SymMatrix::quad_form(std::span<const double> x) const {
  const Vec y = apply(x);
  return 0.5 * dot(y, x);
}

SymMatrix& SymMatrix::add_scaled(const SymMatrix& other, double factor) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += factor * other.a_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double c) {
  for (double& v : a_) v *= c;
  return *this;
}

SymMatrix symmetrized_product(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  std::vector<double> p;
  multiply(a.flat(), b.flat(), n, p);
  return SymMatrix::build(n, [&](int i, int j) {
    return 0.5 * (p[static_cast<std::size_t>(i) * n + j] + p[static_cast<std::size_t>(j) * n + i]);
  });
}

SymMatrix congruence(const SymMatrix& s, const SymMatrix& b) {
  require_same_dim(s, b);
  const int n = s.dim();
  std::vector<double> sb, sbs;
  multiply(s.flat(), b.flat(), n, sb);
  multiply(sb, s.flat(), n, sbs);
  return SymMatrix::build(n, [&](int i, int j) {
    return 0.5 *
           (sbs[static_cast<std::size_t>(i) * n + j] + sbs[static_cast<std::size_t>(j) * n + i]);
  });
}

double frobenius_distance(const SymMatrix& a, const SymMatrix& b) {
  require_same_dim(a, b);
  double s = 0.0;
  const auto fa = a.flat();
  const auto fb = b.flat();
  for (std::size_t k = 0; k < fa.size(); ++k) {
    const double d = fa[k] - fb[k];
    s += d * d;
  }
  return std::sqrt(s);
}

void require_same_dim(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) fail(Errc::DimMismatch, "matrix dimensions differ");
}

}  // namespace mm

#include "core/linsolve.hpp"

#include <cmath>

namespace mm {

Vec lu_solve(std::vector<double> a, int n, Vec rhs) {
  if (static_cast<int>(rhs.size()) != n || a.size() != static_cast<std::size_t>(n) * n)
    fail(Errc::DimMismatch, "lu_solve: inconsistent system size");

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a[static_cast<std::size_t>(col) * n + col]);
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(a[static_cast<std::size_t>(r) * n + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) fail(Errc::SingularSystem, "lu_solve: singular system");
    if (pivot != col) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(pivot) * n + j],
                  a[static_cast<std::size_t>(col) * n + j]);
      std::swap(rhs[pivot], rhs[col]);
    }
    const double diag = a[static_cast<std::size_t>(col) * n + col];
    for (int r = col + 1; r < n; ++r) {
      const double factor = a[static_cast<std::size_t>(r) * n + col] / diag;
      if (factor == 0.0) continue;
      a[static_cast<std::size_t>(r) * n + col] = 0.0;
      for (int j = col + 1; j < n; ++j)
        a[static_cast<std::size_t>(r) * n + j] -= factor * a[static_cast<std::size_t>(col) * n + j];
      rhs[r] -= factor * rhs[col];
    }
  }

  Vec x(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int j = r + 1; j < n; ++j) s -= a[static_cast<std::size_t>(r) * n + j] * x[j];
    x[r] = s / a[static_cast<std::size_t>(r) * n + r];
  }
  return x;
}

}  // namespace mm

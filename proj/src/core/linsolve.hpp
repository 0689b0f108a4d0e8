#pragma once

#include "core/vec.hpp"

namespace mm {

/// Solves the dense n x n system a x = rhs by LU with partial pivoting.
/// `a` is row-major and consumed in place. Throws SingularSystem on a zero
/// pivot. Deliberately independent of the spectral machinery so it can serve
/// as the second route in cross-checks.
Vec lu_solve(std::vector<double> a, int n, Vec rhs);

}  // namespace mm

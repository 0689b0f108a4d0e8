#pragma once

#include "core/averaging.hpp"

namespace mm {

/// (Id + A)^-1 for PSD A; spectrum lands in (0, 1].
SymMatrix resolvent(const SymMatrix& a, const Tolerances& tol = {});

/// Yosida regularization: eigenvalues map a -> a / (1 + mu a); a smoothed,
/// bounded surrogate of A that recovers A as mu -> 0.
SymMatrix yosida(const SymMatrix& a, MuParam mu, const Tolerances& tol = {});

/// || J_{mu R} - sum_i w_i J_{mu A_i} ||_F for R the resolvent average;
/// contract: <= eq * (1 + n).
double resolvent_identity_residual(const Ensemble& ens, MuParam mu, const Tolerances& tol = {});

/// Yosida analogue; contract: <= eq * (1 + n) * max(1, 1/mu).
double yosida_identity_residual(const Ensemble& ens, MuParam mu, const Tolerances& tol = {});

}  // namespace mm

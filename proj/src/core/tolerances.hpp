#pragma once

#include "core/errors.hpp"

namespace mm {

/// Tolerance knobs shared by the whole library.
///
/// `spec` bounds spectral residuals (decomposition quality), `psd` is the
/// Loewner dead-band slack used by all definiteness tests, `eq` bounds
/// identity residuals. Must satisfy 0 < spec <= psd <= eq.
struct Tolerances {
  double spec = 1e-12;
  double psd = 1e-10;
  double eq = 1e-9;

  void validate() const {
    if (!(spec > 0.0 && psd > 0.0 && eq > 0.0))
      fail(Errc::BadArgument, "tolerances must be strictly positive");
    if (!(spec <= psd && psd <= eq))
      fail(Errc::BadArgument, "tolerances must satisfy spec <= psd <= eq");
  }
};

}  // namespace mm

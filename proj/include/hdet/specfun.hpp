#pragma once

// Log-Gamma and log-Barnes-G at arbitrary precision, the large-argument
// asymptotic of G, and the constant K appearing in it.

#include "hdet/bigreal.hpp"

namespace hdet {

/// ln Gamma(z) for z > 0. Throws DomainError otherwise.
BigReal log_gamma(const BigReal& z, Precision p);

/// ln G(z) for z > 0, where G is the Barnes G-function,
/// G(z+1) = Gamma(z) G(z), G(1) = 1.
///
/// Arguments below the asymptotic threshold are shifted up with the
/// difference equation; above it the Stirling-type series
///   ln G(w+1) = (w^2/2 - 1/12) ln w - 3w^2/4 + (w/2) ln 2pi + zeta'(-1)
///               + sum_{k>=1} B_{2k+2} / (4k(k+1) w^{2k})
/// is summed until its terms drop below the working precision. The constant
/// zeta'(-1) is calibrated once per precision from G(1) = 1.
BigReal log_barnes_g(const BigReal& z, Precision p);

/// ln of n^{(n+a)^2/2 - 1/12} e^{-3n^2/4 - an} (2pi)^{(n+a)/2} K, the leading
/// large-n form of G(n+a+1). Requires n >= 1.
BigReal log_barnes_g_asym(const BigReal& n, const BigReal& a, Precision p);

/// ln K with K = G(1/2)^{2/3} pi^{1/6} 2^{-1/36}.
BigReal constant_K(Precision p);

/// zeta'(-1) at precision p (equals ln K).
BigReal zeta_prime_minus_one(Precision p);

}  // namespace hdet

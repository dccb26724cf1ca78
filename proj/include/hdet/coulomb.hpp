#pragma once

// Coulomb-fluid (equilibrium measure) description of the Jacobi ensemble:
// support [a_n, b_n], density sigma and the approximate recurrence
// coefficients it predicts.

#include "hdet/bigreal.hpp"
#include "hdet/jacobi.hpp"
#include "hdet/quadrature.hpp"

namespace hdet {

/// v'(x) = -alpha/(x-1) - beta/(x+1). DomainError at x = +-1.
BigReal v_prime(const BigReal& x, const JacobiParams& jp);

/// Two denominators appear for the endpoint solutions. With (2n+s)^2,
/// s = alpha+beta, the endpoints satisfy the fluid equations and reproduce
/// the closed forms of alpha~_n and beta~_n; with (2n+s+2)^2 (`printed`) they
/// do neither exactly but agree to leading order in 1/n.
enum class EndpointForm { consistent, printed };

struct SupportInterval {
  BigReal a;
  BigReal b;
  unsigned n = 0;
  JacobiParams jp{0, 0};
  EndpointForm form = EndpointForm::consistent;

  /// Centre (b+a)/2 and half-width (b-a)/2.
  BigReal centre() const { return (b + a) / 2; }
  BigReal half_width() const { return (b - a) / 2; }
};

/// (beta^2 - alpha^2 -+ 4 sqrt(n(n+alpha)(n+beta)(n+s))) / D^2. For
/// alpha = 0 (beta = 0) the consistent b_n (a_n) sits exactly at 1 (-1).
SupportInterval support_endpoints(unsigned n, const JacobiParams& jp, Precision p,
                                  EndpointForm form = EndpointForm::consistent);

/// Residuals of the endpoint equations
///   n + s/2 = alpha/(2A) + beta/(2B),   0 = alpha/A - beta/B,
/// with A = sqrt((1-a)(1-b)), B = sqrt((1+a)(1+b)), multiplied through by AB
/// so they stay finite when an endpoint reaches +-1. For a negative exponent
/// the endpoint formula solves these with alpha, beta replaced by |alpha|,
/// |beta|, so the signed residuals are O(1/n) rather than 0.
struct EndpointResiduals {
  BigReal first;
  BigReal second;
};
EndpointResiduals endpoint_residuals(const SupportInterval& si, Precision p);

/// sigma(x) = (n + s/2) sqrt((b-x)(x-a)) / (pi (1 - x^2)) for a <= x <= b;
/// 0 at an endpoint inside (-1,1). DomainError outside the support or at an
/// endpoint equal to +-1, where sigma is unbounded.
BigReal equilibrium_density(const BigReal& x, const SupportInterval& si, Precision p);

/// Integral of f sigma over the support: the parts f(+-1)/(1-+x) in closed
/// form, the rest by Gauss-Chebyshev quadrature whose size doubles until
/// successive values agree to 10^(-digits/2). An empty f means f = 1.
BigReal density_integral(const SupportInterval& si, const RealFunction& f, Precision p);

/// Total mass of sigma; n when the endpoints are consistent.
BigReal density_mass(const SupportInterval& si, Precision p);

struct FluidRecurrence {
  /// (b+a)/2 and (b-a)^2/16 from the endpoints.
  BigReal alpha_tilde;
  BigReal beta_tilde;
  /// (beta^2-alpha^2)/(2n+s)^2 and 4n(n+alpha)(n+beta)(n+s)/(2n+s)^4.
  BigReal alpha_tilde_closed;
  BigReal beta_tilde_closed;
  BigReal R;
  BigReal r;
};

FluidRecurrence fluid_recurrence(unsigned n, const JacobiParams& jp, Precision p,
                                 EndpointForm form = EndpointForm::consistent);

}  // namespace hdet

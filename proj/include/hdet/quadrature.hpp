#pragma once

// Gauss-Jacobi quadrature at arbitrary precision and Chebyshev interpolation
// on [-1,1].

#include <functional>
#include <vector>

#include "hdet/bigreal.hpp"
#include "hdet/jacobi.hpp"
#include "hdet/perturbation.hpp"

namespace hdet {

/// m-point Gauss rule for the weight (1-x)^alpha (1+x)^beta. Nodes are
/// strictly increasing; the rule is exact for polynomials of degree <= 2m-1.
struct QuadratureRule {
  std::vector<BigReal> nodes;
  std::vector<BigReal> weights;
  unsigned order = 0;
};

/// Nodes are the zeros of the monic degree-m Jacobi polynomial. Each zero is
/// isolated by Sturm-sequence bisection on the Jacobi matrix, refined in
/// extended double by Newton from the arccos-spaced guess (bisection when a
/// step leaves the bracket), then polished by Newton at full precision.
/// Weights come from the Christoffel formula h_{m-1} / (P_{m-1}(x) P_m'(x)).
/// Throws ConvergenceError if polishing stalls.
QuadratureRule gauss_jacobi_rule(unsigned m, const JacobiParams& jp, Precision p);

/// Sum_i w_i x_i^k h(x_i) over an m-point rule; convergence in m is the
/// caller's concern.
BigReal perturbed_moment(unsigned k, const JacobiParams& jp, const PerturbationFn& h, unsigned m, Precision p);

/// mu_0 .. mu_{count-1} of w_{alpha,beta} h on a prepared rule.
std::vector<BigReal> perturbed_moments(unsigned count, const QuadratureRule& rule, const PerturbationFn& h,
                                       Precision p);

/// Chebyshev-T coefficients with the convention
///   f(cos t) = c_0/2 + sum_{k=1}^{M} c_k cos(k t),
/// so that c_k = (2/pi) integral f T_k / sqrt(1-x^2) for k >= 0 and the
/// Chebyshev mean (1/pi) integral f / sqrt(1-x^2) is c_0/2. The interpolant at
/// the M+1 Lobatto points also halves its top term; that halving is already
/// applied to the stored c_M.
struct ChebExpansion {
  std::vector<BigReal> coeffs;
  /// >= max(|c_{M-1}|, |c_M|), floored at the rounding level.
  BigReal tail_bound;

  unsigned degree() const noexcept { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1); }
};

using RealFunction = std::function<BigReal(const BigReal&)>;

/// Interpolates f at cos(pi j / M), j = 0..M.
ChebExpansion cheb_expand(const RealFunction& f, unsigned M, Precision p);

/// Doubles M from `min_M` (a power of two) until tail_bound < 10^{-digits/2};
/// throws ConvergenceError beyond `max_M`.
ChebExpansion cheb_expand_auto(const RealFunction& f, Precision p, unsigned min_M = 64, unsigned max_M = 8192);

/// Expansion of ln h with the automatic resolution (or a fixed M when m > 0).
ChebExpansion cheb_expand_log(const PerturbationFn& h, Precision p, unsigned M = 0);

/// Clenshaw evaluation of the expansion at x.
BigReal cheb_eval(const ChebExpansion& ce, const BigReal& x);

}  // namespace hdet

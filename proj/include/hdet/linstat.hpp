#pragma once

// Large-n linear statistics of ln h and the resulting prediction for
// ln D_n[w_{alpha,beta} h].
//
// Coefficients follow quadrature.hpp: f(cos t) = c_0/2 + sum c_k cos(k t).
// Then (1/pi) integral f/sqrt(1-x^2) = c_0/2, and for f = ln h the double
// principal-value integral reduces to (1/8) sum_k k c_k^2.

#include "hdet/bigreal.hpp"
#include "hdet/coulomb.hpp"
#include "hdet/jacobi.hpp"
#include "hdet/perturbation.hpp"
#include "hdet/quadrature.hpp"

namespace hdet {

/// Orientation of the Cauchy kernel in P integral sqrt(1-y^2) f'(y) K dy.
/// With 1/(y-x) the transform of sqrt(1-y^2) U_{k-1}(y) is -pi T_k(x); with
/// 1/(x-y) it is +pi T_k(x).
enum class Kernel { y_minus_x, x_minus_y };

/// Chebyshev coefficients of x -> P integral_{-1}^{1} sqrt(1-y^2) f'(y) K(x,y) dy
/// where ce represents f. Output coefficient k is -+ pi k c_k; the constant
/// term is 0.
ChebExpansion hilbert_transform_cheb(const ChebExpansion& ce, Kernel kernel = Kernel::x_minus_y);

/// (1/4 pi^2) integral f(x)/sqrt(1-x^2) [P integral sqrt(1-y^2) f'(y)/(x-y) dy] dx
///   = (1/8) sum_{k>=1} k c_k^2 >= 0.
/// The kernel 1/(x-y) is the orientation for which ln(D_n ratio) minus the
/// mean term tends to this value; with 1/(y-x) the sign flips.
BigReal pv_double_integral(const ChebExpansion& ce);

/// The same integral by Chebyshev-Gauss quadrature of f times the
/// hilbert_transform_cheb output.
BigReal pv_double_integral_quadrature(const ChebExpansion& ce, Precision p);

enum class MeanForm { limit, finite };

/// integral ln h sigma. Limit form: (n + s/2) c_0/2. Finite form: the
/// integral against the finite-n density on [a_n, b_n].
BigReal mean_term(const ChebExpansion& ce, unsigned n, const JacobiParams& jp, MeanForm form, Precision p);

/// The two terms of the large-n formula for ln < prod h(x_j) >.
struct LinStatTerms {
  BigReal mean_term;
  BigReal variance_term;
  unsigned n = 0;
  MeanForm form = MeanForm::limit;

  BigReal total() const { return mean_term + variance_term; }
};

/// Limit form uses pv_double_integral of ln h; finite form uses the
/// coefficients of ln h(R_n + r_n s) on [-1,1] together with the finite mean.
LinStatTerms linstat_terms(const ChebExpansion& ce, unsigned n, const JacobiParams& jp, MeanForm form,
                           Precision p);

struct AsymptoticPrediction {
  unsigned n = 0;
  /// ln(2^{-n(n+s)} n^{(alpha^2+beta^2)/2-1/4} (2 pi)^n)
  BigReal log_leading;
  /// (n/pi) integral ln h/sqrt(1-x^2) = n c_0/2
  BigReal log_mean;
  struct Constant {
    BigReal pv_part;
    /// (s/(2 pi)) integral ln h/sqrt(1-x^2) = (s/2) c_0/2
    BigReal boundary_part;
    BigReal pure_constant_part;
    BigReal total() const { return pv_part + boundary_part + pure_constant_part; }
  } log_C;
  /// -(alpha ln h(1) + beta ln h(-1))/2. The finite-n mean term carries this
  /// O(1) piece from the density's growth near +-1; it is not part of
  /// total().
  BigReal endpoint_correction;
  /// Chebyshev resolution used for ln h.
  unsigned cheb_degree = 0;

  BigReal total() const { return log_leading + log_mean + log_C.total(); }
  BigReal corrected_total() const { return total() + endpoint_correction; }
};

/// Throws ValidityError when !jp.asymptotic_valid(). `cheb_m` 0 picks the
/// resolution automatically.
AsymptoticPrediction assemble_prediction(unsigned n, const JacobiParams& jp, const PerturbationFn& h, Precision p,
                                         unsigned cheb_m = 0);

/// Same, reusing an expansion of ln h.
AsymptoticPrediction assemble_prediction(unsigned n, const JacobiParams& jp, const PerturbationFn& h,
                                         const ChebExpansion& ce, Precision p);

}  // namespace hdet

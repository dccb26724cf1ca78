#pragma once

// Closed-form quantities for the pure Jacobi weight (1-x)^alpha (1+x)^beta on
// [-1,1]: moments, monic recurrence coefficients, norms h_n, the exact Hankel
// determinant D_n and its large-n asymptotic.
//
// The exponents are held as exact rationals, so the recurrence coefficients
// come out exact and every BigReal quantity can be produced at any precision.

#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "hdet/bigreal.hpp"

namespace hdet {

class JacobiParams {
 public:
  /// Throws DomainError unless alpha > -1 and beta > -1.
  JacobiParams(mpq_class alpha, mpq_class beta);
  /// Parses decimal or p/q strings, e.g. "0.5", "-0.9", "3/2".
  static JacobiParams parse(std::string_view alpha, std::string_view beta);

  const mpq_class& alpha() const noexcept { return alpha_; }
  const mpq_class& beta() const noexcept { return beta_; }
  mpq_class sum() const { return alpha_ + beta_; }

  /// alpha >= -1/2 and beta >= -1/2: the range where the asymptotic
  /// formulas are claimed.
  bool asymptotic_valid() const;
  /// Both exponents are nonnegative integers (exact rational pipeline applies).
  bool integer_exponents() const;

  BigReal alpha_real(Precision p) const { return BigReal(alpha_, p); }
  BigReal beta_real(Precision p) const { return BigReal(beta_, p); }

  friend bool operator==(const JacobiParams& a, const JacobiParams& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  mpq_class alpha_;
  mpq_class beta_;
};

/// Parses "0.25", "-3", "1e-2", "3/2" into an exact rational.
mpq_class parse_rational(std::string_view text);

/// Monic three-term recurrence z P_k = P_{k+1} + alpha[k] P_k + beta[k] P_{k-1}.
/// beta[0] is 0 by convention (beta_0 P_{-1} := 0); beta[k] > 0 for k >= 1.
struct RecurrenceCoeffs {
  std::vector<mpq_class> alpha;
  std::vector<mpq_class> beta;

  std::size_t size() const noexcept { return alpha.size(); }
};

/// mu_k = integral of x^k w_{alpha,beta}, via
///   2^{a+b+1} sum_j C(k,j) (-2)^j B(a+j+1, b+1).
/// The alternating sum loses about k log10(3) digits, which are added
/// internally before rounding to p.
BigReal jacobi_moment(unsigned k, const JacobiParams& jp, Precision p);
/// mu_0 .. mu_{count-1}.
std::vector<BigReal> jacobi_moments(unsigned count, const JacobiParams& jp, Precision p);

/// alpha_n. For n = 0 the value is mu_1/mu_0 = (beta-alpha)/(alpha+beta+2),
/// which also covers the 0/0 form at alpha+beta = 0.
mpq_class jacobi_alpha_n(unsigned n, const JacobiParams& jp);
/// beta_n for n >= 1; the common factor (n+alpha+beta)/(2n+alpha+beta-1) is
/// cancelled at n = 1 so alpha+beta = -1 is handled.
mpq_class jacobi_beta_n(unsigned n, const JacobiParams& jp);
/// Coefficients for k = 0..count-1.
RecurrenceCoeffs jacobi_recurrence(unsigned count, const JacobiParams& jp);

BigReal jacobi_log_hn(unsigned n, const JacobiParams& jp, Precision p);
/// h_n = 2^{2n+a+b+1} G(n+1)G(n+a+1)G(n+b+1)G(n+a+b+1) / ((2n+a+b+1) G(2n+a+b+1)^2)
/// with G = Gamma here, assembled in log space.
BigReal jacobi_hn(unsigned n, const JacobiParams& jp, Precision p);

/// ln D_n from the Barnes-G closed form. The n-independent factor
///   G^2((s+1)/2) G^2(s/2+1) Gamma((s+1)/2) / (G(s+1) G(a+1) G(b+1)),  s = a+b,
/// is evaluated in the equivalent form
///   G^2((s+3)/2) G^2((s+2)/2) Gamma(s+2) / (2 Gamma((s+3)/2) G(s+2) G(a+1) G(b+1))
/// obtained from G(z+1) = Gamma(z) G(z); all its arguments stay positive for
/// every a, b > -1, including s = -1 where the original form is 0 * inf.
BigReal jacobi_logdet_exact(unsigned n, const JacobiParams& jp, Precision p);

/// ln of the n-independent Barnes-G ratio above.
BigReal jacobi_log_constant(const JacobiParams& jp, Precision p);

/// ln( 2^{-n(n+a+b)} n^{(a^2+b^2)/2 - 1/4} (2 pi)^n ).
BigReal jacobi_log_leading(unsigned n, const JacobiParams& jp, Precision p);

/// Leading term plus constant. Throws ValidityError when !asymptotic_valid().
BigReal jacobi_logdet_asym(unsigned n, const JacobiParams& jp, Precision p);

}  // namespace hdet

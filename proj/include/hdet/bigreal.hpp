#pragma once

// Arbitrary-precision real scalar backed by MPFR.
//
// Every BigReal carries its own precision; there is no global default. Binary
// operations produce a result at the larger of the two operand precisions, so
// mixing a low-precision constant into a high-precision computation never
// silently truncates the latter. Every operation that would yield NaN or an
// infinity throws DomainError instead.

#include <mpfr.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hdet/errors.hpp"

namespace hdet {

/// Working precision expressed in significant decimal digits.
///
/// Results of operations taking a Precision are promised to a relative error
/// of at most 10^(8 - decimal_digits): eight guard digits are kept for the
/// caller to truncate.
class Precision {
 public:
  static constexpr int kMinDigits = 32;
  static constexpr int kGuardDigits = 8;

  explicit Precision(int decimal_digits);

  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept;

  /// Same policy with `extra` more digits; used internally to absorb
  /// cancellation before rounding back.
  Precision plus(int extra) const { return Precision(digits_ + extra); }

  friend bool operator==(Precision a, Precision b) { return a.digits_ == b.digits_; }

 private:
  int digits_;
};

class BigReal {
 public:
  BigReal();
  explicit BigReal(Precision p);
  BigReal(long v, Precision p);
  BigReal(int v, Precision p) : BigReal(static_cast<long>(v), p) {}
  BigReal(double v, Precision p);
  BigReal(const mpq_class& q, Precision p);
  BigReal(const mpz_class& z, Precision p);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  /// Parses a decimal literal ("0.999", "1e-3", "-2.5E+4") exactly rounded.
  static BigReal parse(std::string_view text, Precision p);
  /// Copy of `x` rounded (or widened) to precision `p`.
  static BigReal rounded(const BigReal& x, Precision p);

  static BigReal pi(Precision p);
  static BigReal ln2(Precision p);
  /// Riemann zeta at a positive integer > 1.
  static BigReal zeta(unsigned long k, Precision p);

  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(v_); }
  /// Decimal digits carried by this value (floor of bits * log10 2).
  int digits10() const noexcept;

  int sign() const noexcept { return mpfr_sgn(v_); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const;

  /// Scientific notation with `sig` significant digits, e.g. "-1.2500e-01".
  std::string to_string(int sig) const;
  /// Full-precision decimal string.
  std::string to_string() const { return to_string(digits10()); }

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator+=(long o);
  BigReal& operator-=(long o);
  BigReal& operator*=(long o);
  BigReal& operator/=(long o);

  BigReal operator-() const;

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator+(BigReal a, long b) { return a += b; }
  friend BigReal operator-(BigReal a, long b) { return a -= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }
  friend BigReal operator+(long a, BigReal b) { return b += a; }
  friend BigReal operator*(long a, BigReal b) { return b *= a; }
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator/(long a, const BigReal& b);

  friend int compare(const BigReal& a, const BigReal& b) noexcept { return mpfr_cmp(a.v_, b.v_); }
  friend int compare(const BigReal& a, long b) noexcept { return mpfr_cmp_si(a.v_, b); }
  friend bool operator<(const BigReal& a, const BigReal& b) noexcept { return compare(a, b) < 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) noexcept { return compare(a, b) > 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) noexcept { return compare(a, b) <= 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) noexcept { return compare(a, b) >= 0; }
  friend bool operator==(const BigReal& a, const BigReal& b) noexcept { return compare(a, b) == 0; }
  friend bool operator<(const BigReal& a, long b) noexcept { return compare(a, b) < 0; }
  friend bool operator>(const BigReal& a, long b) noexcept { return compare(a, b) > 0; }
  friend bool operator<=(const BigReal& a, long b) noexcept { return compare(a, b) <= 0; }
  friend bool operator>=(const BigReal& a, long b) noexcept { return compare(a, b) >= 0; }

  friend BigReal abs(const BigReal& x);
  friend BigReal sqrt(const BigReal& x);
  friend BigReal log(const BigReal& x);
  friend BigReal log1p(const BigReal& x);
  friend BigReal exp(const BigReal& x);
  friend BigReal pow(const BigReal& x, long k);
  friend BigReal pow(const BigReal& x, const BigReal& y);
  friend BigReal cos(const BigReal& x);
  friend BigReal sin(const BigReal& x);
  friend BigReal acos(const BigReal& x);
  friend BigReal cosh(const BigReal& x);
  friend BigReal sinh(const BigReal& x);
  /// ln Gamma(x) for x > 0.
  friend BigReal lngamma(const BigReal& x);
  friend BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }
  friend BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }

  friend std::ostream& operator<<(std::ostream& os, const BigReal& x);

  mpfr_srcptr raw() const noexcept { return v_; }
  mpfr_ptr raw() noexcept { return v_; }

 private:
  void widen_to(mpfr_prec_t bits);
  void check(const char* op) const;

  mpfr_t v_;
};

/// 10^e at precision p.
BigReal pow10(long e, Precision p);

/// Relative error |a-b| / max(|a|,|b|); 0 when both vanish.
BigReal relative_difference(const BigReal& a, const BigReal& b);

}  // namespace hdet

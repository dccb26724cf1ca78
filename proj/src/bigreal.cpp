#include "hdet/bigreal.hpp"

#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>

namespace hdet {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 4;
}

}  // namespace

Precision::Precision(int decimal_digits) : digits_(decimal_digits) {
  if (decimal_digits < kMinDigits) {
    throw DomainError("precision must be at least " + std::to_string(kMinDigits) +
                      " decimal digits, got " + std::to_string(decimal_digits));
  }
}

mpfr_prec_t Precision::bits() const noexcept { return digits_to_bits(digits_); }

BigReal::BigReal() {
  mpfr_init2(v_, 64);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long v, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigReal::BigReal(double v, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_d(v_, v, MPFR_RNDN);
  check("construct from double");
}

BigReal::BigReal(const mpq_class& q, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& z, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, other.bits());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::parse(std::string_view text, Precision p) {
  std::string s(text);
  BigReal r(p);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw DomainError("not a decimal number: '" + s + "'");
  }
  r.check("parse");
  return r;
}

BigReal BigReal::rounded(const BigReal& x, Precision p) {
  BigReal r(p);
  mpfr_set(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pi(Precision p) {
  BigReal r(p);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::ln2(Precision p) {
  BigReal r(p);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::zeta(unsigned long k, Precision p) {
  if (k < 2) throw DomainError("zeta pole at 1");
  BigReal r(p);
  mpfr_zeta_ui(r.v_, k, MPFR_RNDN);
  return r;
}

int BigReal::digits10() const noexcept {
  return static_cast<int>(std::floor(static_cast<double>(bits()) / kLog2Of10));
}

long BigReal::to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

std::string BigReal::to_string(int sig) const {
  if (sig < 1) sig = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", sig - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

void BigReal::widen_to(mpfr_prec_t bits) {
  if (bits > this->bits()) mpfr_prec_round(v_, bits, MPFR_RNDN);
}

void BigReal::check(const char* op) const {
  if (!mpfr_number_p(v_)) {
    throw DomainError(std::string("non-finite result in ") + op);
  }
}

BigReal& BigReal::operator+=(const BigReal& o) {
  widen_to(o.bits());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  check("add");
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  widen_to(o.bits());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  check("subtract");
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  widen_to(o.bits());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  check("multiply");
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  widen_to(o.bits());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  check("divide");
  return *this;
}

BigReal& BigReal::operator+=(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  check("multiply");
  return *this;
}

BigReal& BigReal::operator/=(long o) {
  if (o == 0) throw DomainError("division by zero");
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal r(b);
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  BigReal r(b);
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

BigReal abs(const BigReal& x) {
  BigReal r(x);
  mpfr_abs(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  BigReal r(x);
  mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log of a nonpositive number");
  BigReal r(x);
  mpfr_log(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal log1p(const BigReal& x) {
  if (x <= -1) throw DomainError("log1p argument <= -1");
  BigReal r(x);
  mpfr_log1p(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r(x);
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  r.check("exp");
  return r;
}

BigReal pow(const BigReal& x, long k) {
  if (x.is_zero() && k < 0) throw DomainError("negative power of zero");
  BigReal r(x);
  mpfr_pow_si(r.v_, x.v_, k, MPFR_RNDN);
  r.check("pow");
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  if (mpfr_integer_p(y.v_) && mpfr_fits_slong_p(y.v_, MPFR_RNDN)) {
    BigReal r = pow(x, y.to_long());
    r.widen_to(y.bits());
    return r;
  }
  if (x.sign() < 0) throw DomainError("non-integer power of a negative number");
  if (x.is_zero() && y.sign() <= 0) throw DomainError("nonpositive power of zero");
  BigReal r(x);
  r.widen_to(y.bits());
  mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
  r.check("pow");
  return r;
}

BigReal cos(const BigReal& x) {
  BigReal r(x);
  mpfr_cos(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal sin(const BigReal& x) {
  BigReal r(x);
  mpfr_sin(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal acos(const BigReal& x) {
  if (x > 1 || x < -1) throw DomainError("acos argument outside [-1,1]");
  BigReal r(x);
  mpfr_acos(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal cosh(const BigReal& x) {
  BigReal r(x);
  mpfr_cosh(r.v_, x.v_, MPFR_RNDN);
  r.check("cosh");
  return r;
}

BigReal sinh(const BigReal& x) {
  BigReal r(x);
  mpfr_sinh(r.v_, x.v_, MPFR_RNDN);
  r.check("sinh");
  return r;
}

BigReal lngamma(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log-gamma requires a positive argument");
  BigReal r(x);
  mpfr_lngamma(r.v_, x.v_, MPFR_RNDN);
  r.check("lngamma");
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) {
  return os << x.to_string(std::min(x.digits10(), 40));
}

BigReal pow10(long e, Precision p) { return pow(BigReal(10L, p), e); }

BigReal relative_difference(const BigReal& a, const BigReal& b) {
  BigReal scale = max(abs(a), abs(b));
  BigReal diff = abs(a - b);
  if (scale.is_zero()) return diff;
  return diff / scale;
}

}  // namespace hdet

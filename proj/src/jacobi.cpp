#include "hdet/jacobi.hpp"

#include <cmath>
#include <string>

#include "hdet/specfun.hpp"

namespace hdet {

namespace {

// Cancellation in ln G / ln Gamma sums of size O(n^2 ln n) that produce
// results of size O(n^2).
constexpr int kLogdetGuard = 8;

BigReal big(const mpq_class& q, Precision p) { return BigReal(q, p); }

BigReal log_g(const mpq_class& z, Precision p) { return log_barnes_g(big(z, p), p); }
BigReal log_gam(const mpq_class& z, Precision p) { return log_gamma(big(z, p), p); }

}  // namespace

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  const auto fail = [&] { throw DomainError("not a rational number: '" + s + "'"); };
  if (s.empty()) fail();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class num = parse_rational(s.substr(0, slash));
    mpq_class den = parse_rational(s.substr(slash + 1));
    if (den == 0) fail();
    mpq_class r = num / den;
    r.canonicalize();
    return r;
  }
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) fail();
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') fail();
    std::string e = s.substr(i + 1);
    if (e.empty()) fail();
    std::size_t used = 0;
    try {
      exponent = std::stol(e, &used);
    } catch (const std::exception&) {
      fail();
    }
    if (used != e.size()) fail();
  }
  mpz_class mant(digits, 10);
  long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  mpq_class r = shift >= 0 ? mpq_class(mant * scale) : mpq_class(mant, scale);
  r.canonicalize();
  return negative ? mpq_class(-r) : r;
}

JacobiParams::JacobiParams(mpq_class alpha, mpq_class beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_ <= -1 || beta_ <= -1) {
    throw DomainError("Jacobi exponents must satisfy alpha > -1 and beta > -1, got alpha = " +
                      alpha_.get_str() + ", beta = " + beta_.get_str());
  }
}

JacobiParams JacobiParams::parse(std::string_view alpha, std::string_view beta) {
  return JacobiParams(parse_rational(alpha), parse_rational(beta));
}

bool JacobiParams::asymptotic_valid() const {
  const mpq_class half(-1, 2);
  return alpha_ >= half && beta_ >= half;
}

bool JacobiParams::integer_exponents() const {
  return alpha_.get_den() == 1 && beta_.get_den() == 1 && alpha_ >= 0 && beta_ >= 0;
}

std::vector<BigReal> jacobi_moments(unsigned count, const JacobiParams& jp, Precision p) {
  std::vector<BigReal> out;
  if (count == 0) return out;
  out.reserve(count);
  const unsigned kmax = count - 1;
  const Precision q = p.plus(static_cast<int>(std::ceil(kmax * 0.4772)) + 10);

  const BigReal a = jp.alpha_real(q);
  const BigReal b = jp.beta_real(q);
  const BigReal s = a + b;
  // Beta(a+1, b+1) through log-gamma; ratio[j] = Beta(a+j+1, b+1) / Beta(a+1, b+1).
  const BigReal beta0 = exp(log_gamma(a + 1, q) + log_gamma(b + 1, q) - log_gamma(s + 2, q));
  const BigReal scale = exp((s + 1) * BigReal::ln2(q)) * beta0;
  std::vector<BigReal> ratio;
  ratio.reserve(count);
  ratio.emplace_back(1L, q);
  for (unsigned j = 1; j <= kmax; ++j) {
    ratio.push_back(ratio.back() * (a + static_cast<long>(j)) / (s + static_cast<long>(j + 1)));
  }
  for (unsigned k = 0; k <= kmax; ++k) {
    BigReal sum(q);
    BigReal coeff(1L, q);  // C(k,j) (-2)^j, exact at this precision
    for (unsigned j = 0; j <= k; ++j) {
      sum += coeff * ratio[j];
      coeff *= -2 * static_cast<long>(k - j);
      coeff /= static_cast<long>(j + 1);
    }
    out.push_back(BigReal::rounded(scale * sum, p));
  }
  return out;
}

BigReal jacobi_moment(unsigned k, const JacobiParams& jp, Precision p) {
  return jacobi_moments(k + 1, jp, p).back();
}

mpq_class jacobi_alpha_n(unsigned n, const JacobiParams& jp) {
  const mpq_class& a = jp.alpha();
  const mpq_class& b = jp.beta();
  const mpq_class s = a + b;
  if (n == 0) {
    mpq_class r = (b - a) / (s + 2);
    r.canonicalize();
    return r;
  }
  mpq_class r = (b * b - a * a) / ((2 * n + s) * (2 * n + s + 2));
  r.canonicalize();
  return r;
}

mpq_class jacobi_beta_n(unsigned n, const JacobiParams& jp) {
  if (n == 0) throw DomainError("jacobi_beta_n: n must be >= 1");
  const mpq_class& a = jp.alpha();
  const mpq_class& b = jp.beta();
  const mpq_class s = a + b;
  const mpq_class two_n_s = 2 * n + s;
  mpq_class r;
  if (n == 1) {
    r = 4 * (1 + a) * (1 + b) / (two_n_s * two_n_s * (two_n_s + 1));
  } else {
    r = 4 * n * (n + a) * (n + b) * (n + s) / (two_n_s * two_n_s * (two_n_s + 1) * (two_n_s - 1));
  }
  r.canonicalize();
  return r;
}

RecurrenceCoeffs jacobi_recurrence(unsigned count, const JacobiParams& jp) {
  RecurrenceCoeffs rc;
  rc.alpha.reserve(count);
  rc.beta.reserve(count);
  for (unsigned k = 0; k < count; ++k) {
    rc.alpha.push_back(jacobi_alpha_n(k, jp));
    rc.beta.push_back(k == 0 ? mpq_class(0) : jacobi_beta_n(k, jp));
  }
  return rc;
}

BigReal jacobi_log_hn(unsigned n, const JacobiParams& jp, Precision p) {
  const Precision q = p.plus(kLogdetGuard);
  const mpq_class& a = jp.alpha();
  const mpq_class& b = jp.beta();
  const mpq_class s = a + b;
  const BigReal ln2 = BigReal::ln2(q);
  if (n == 0) {
    // 2^{s+1} Gamma(a+1) Gamma(b+1) / Gamma(s+2); the general expression is
    // 0/0 at s = -1 and has Gamma(s+1) < 0 for s < -1.
    BigReal r = big(s + 1, q) * ln2 + log_gam(a + 1, q) + log_gam(b + 1, q) - log_gam(s + 2, q);
    return BigReal::rounded(r, p);
  }
  BigReal r = big(2 * n + s + 1, q) * ln2 + log_gam(mpq_class(n + 1), q) + log_gam(n + a + 1, q) +
              log_gam(n + b + 1, q) + log_gam(n + s + 1, q) - log(big(2 * n + s + 1, q)) -
              log_gam(2 * n + s + 1, q) * 2;
  return BigReal::rounded(r, p);
}

BigReal jacobi_hn(unsigned n, const JacobiParams& jp, Precision p) {
  return exp(jacobi_log_hn(n, jp, p));
}

BigReal jacobi_log_constant(const JacobiParams& jp, Precision p) {
  const Precision q = p.plus(kLogdetGuard);
  const mpq_class& a = jp.alpha();
  const mpq_class& b = jp.beta();
  const mpq_class s = a + b;
  const mpq_class half_s3 = (s + 3) / 2;
  const mpq_class half_s2 = (s + 2) / 2;
  BigReal r = log_g(half_s3, q) * 2 + log_g(half_s2, q) * 2 + log_gam(s + 2, q) -
              BigReal::ln2(q) - log_gam(half_s3, q) - log_g(s + 2, q) - log_g(a + 1, q) -
              log_g(b + 1, q);
  return BigReal::rounded(r, p);
}

BigReal jacobi_log_leading(unsigned n, const JacobiParams& jp, Precision p) {
  const Precision q = p.plus(kLogdetGuard);
  const mpq_class& a = jp.alpha();
  const mpq_class& b = jp.beta();
  const mpq_class s = a + b;
  const BigReal nn(static_cast<long>(n), q);
  const mpq_class n_exponent = (a * a + b * b) / 2 - mpq_class(1, 4);
  BigReal r = -(nn * big(n + s, q)) * BigReal::ln2(q) + big(n_exponent, q) * log(nn) +
              nn * log(BigReal::pi(q) * 2);
  return BigReal::rounded(r, p);
}

BigReal jacobi_logdet_exact(unsigned n, const JacobiParams& jp, Precision p) {
  if (n == 0) throw DomainError("jacobi_logdet_exact: n must be >= 1");
  const Precision q = p.plus(kLogdetGuard);
  const mpq_class& a = jp.alpha();
  const mpq_class& b = jp.beta();
  const mpq_class s = a + b;
  const BigReal nn(static_cast<long>(n), q);
  BigReal r = -(nn * big(n + s, q)) * BigReal::ln2(q) + nn * log(BigReal::pi(q) * 2) +
              jacobi_log_constant(jp, q);
  r += log_g(mpq_class(n + 1), q) + log_g(n + a + 1, q) + log_g(n + b + 1, q) +
       log_g(n + s + 1, q);
  r -= log_g(n + (s + 1) / 2, q) * 2 + log_g(n + s / 2 + 1, q) * 2 + log_gam(n + (s + 1) / 2, q);
  return BigReal::rounded(r, p);
}

BigReal jacobi_logdet_asym(unsigned n, const JacobiParams& jp, Precision p) {
  if (n == 0) throw DomainError("jacobi_logdet_asym: n must be >= 1");
  if (!jp.asymptotic_valid()) {
    throw ValidityError("outside stated validity: the asymptotic formula requires alpha >= -1/2 and "
                        "beta >= -1/2 (alpha = " + jp.alpha().get_str() + ", beta = " +
                        jp.beta().get_str() + ")");
  }
  const Precision q = p.plus(kLogdetGuard);
  return BigReal::rounded(jacobi_log_leading(n, jp, q) + jacobi_log_constant(jp, q), p);
}

}  // namespace hdet

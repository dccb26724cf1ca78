#include "hdet/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace hdet {

namespace {

// Digits added internally: the shift reduction subtracts O(W0^2 ln W0)
// quantities to obtain O(1) results.
constexpr int kInternalGuard = 16;

Precision internal(Precision p) { return p.plus(kInternalGuard); }

// Smallest argument w for which the series for ln G(w+1) reaches 10^-digits
// before its terms start growing (the minimal term is about e^{-2 pi w}).
long asymptotic_threshold(Precision q) {
  return static_cast<long>(std::ceil(0.3665 * (q.digits() + 5))) + 2;
}

// Series coefficients B_{2k+2} / (4k(k+1)), k = 1..K, at a fixed precision.
struct SeriesTable {
  mpfr_prec_t bits;
  std::vector<BigReal> coeff;  // coeff[k-1]
};

class SeriesCache {
 public:
  std::shared_ptr<const SeriesTable> get(Precision q, std::size_t terms) {
    std::lock_guard<std::mutex> lock(mu_);
    if (table_ && table_->bits >= q.bits() && table_->coeff.size() >= terms) return table_;
    mpfr_prec_t bits = table_ ? std::max(table_->bits, q.bits()) : q.bits();
    std::size_t count = std::max(terms, table_ ? table_->coeff.size() : std::size_t{0});
    table_ = build(bits, q, count);
    return table_;
  }

 private:
  static std::shared_ptr<const SeriesTable> build(mpfr_prec_t bits, Precision q, std::size_t count) {
    // B_{2j} = (-1)^{j+1} 2 (2j)! zeta(2j) / (2 pi)^{2j}
    Precision work = q;
    while (work.bits() < bits) work = work.plus(1);
    auto table = std::make_shared<SeriesTable>();
    table->bits = work.bits();
    table->coeff.reserve(count);
    BigReal two_pi_sq = BigReal::pi(work) * 2;
    two_pi_sq *= two_pi_sq;
    // scaled = (2j)! / (2 pi)^{2j}, starting from j = 1
    BigReal scaled = BigReal(2L, work) / two_pi_sq;
    for (std::size_t k = 1; k <= count; ++k) {
      const long j = static_cast<long>(k) + 1;  // B_{2j} with j = k + 1
      scaled *= (2 * j - 1) * (2 * j);
      scaled /= two_pi_sq;
      BigReal b = scaled * BigReal::zeta(static_cast<unsigned long>(2 * j), work) * 2;
      if (j % 2 == 0) b = -b;
      b /= 4 * static_cast<long>(k) * (static_cast<long>(k) + 1);
      table->coeff.push_back(std::move(b));
    }
    return table;
  }

  std::mutex mu_;
  std::shared_ptr<const SeriesTable> table_;
};

SeriesCache& series_cache() {
  static SeriesCache cache;
  return cache;
}

// (w^2/2 - 1/12) ln w - 3w^2/4 + (w/2) ln 2pi + sum_k c_k / w^{2k}; no constant.
BigReal lnG_asym_without_constant(const BigReal& w, Precision q) {
  BigReal lw = log(w);
  BigReal w2 = w * w;
  BigReal result = (w2 / 2 - BigReal(1L, q) / 12) * lw - w2 * 3 / 4 +
                   w * log(BigReal::pi(q) * 2) / 2;

  const BigReal inv_w2 = BigReal(1L, q) / w2;
  const BigReal tol = pow10(-(q.digits() + 2), q) * max(abs(result), BigReal(1L, q));
  const double span = std::min(w.to_double(), static_cast<double>(asymptotic_threshold(q)));
  const auto want = static_cast<std::size_t>(std::ceil(3.2 * span)) + 8;
  auto table = series_cache().get(q, want);
  BigReal power = inv_w2;
  BigReal prev_mag;
  for (std::size_t k = 0; k < table->coeff.size(); ++k) {
    BigReal term = table->coeff[k] * power;
    BigReal mag = abs(term);
    if (mag < tol) return result;
    if (k > 0 && mag > prev_mag) break;  // past the minimal term
    result += term;
    prev_mag = std::move(mag);
    power *= inv_w2;
  }
  throw ConvergenceError("Barnes G asymptotic series did not reach working precision at w = " +
                         w.to_string(20));
}

class ConstantCache {
 public:
  BigReal get(Precision q) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = values_.lower_bound(q.bits());
      if (it != values_.end()) return BigReal::rounded(it->second, q);
    }
    BigReal c = calibrate(q);
    std::lock_guard<std::mutex> lock(mu_);
    values_.emplace(q.bits(), c);
    return c;
  }

 private:
  // zeta'(-1) = ln G(N+1) - (series without constant at N), with
  // ln G(N+1) = sum_{j=1}^{N-1} (N - j) ln j from G(1) = 1.
  static BigReal calibrate(Precision q) {
    const long n = asymptotic_threshold(q) + 1;
    BigReal exact(q);
    for (long j = 2; j < n; ++j) exact += log(BigReal(j, q)) * (n - j);
    return exact - lnG_asym_without_constant(BigReal(n, q), q);
  }

  std::mutex mu_;
  std::map<mpfr_prec_t, BigReal> values_;
};

ConstantCache& constant_cache() {
  static ConstantCache cache;
  return cache;
}

}  // namespace

BigReal zeta_prime_minus_one(Precision p) {
  return BigReal::rounded(constant_cache().get(internal(p)), p);
}

BigReal log_gamma(const BigReal& z, Precision p) {
  if (z.sign() <= 0) throw DomainError("log_gamma: argument must be positive, got " + z.to_string(20));
  return lngamma(BigReal::rounded(z, p));
}

BigReal log_barnes_g(const BigReal& z, Precision p) {
  if (z.sign() <= 0) throw DomainError("log_barnes_g: argument must be positive, got " + z.to_string(20));
  const Precision q = internal(p);
  const BigReal zq = BigReal::rounded(z, q);
  const long threshold = asymptotic_threshold(q);
  const BigReal constant = constant_cache().get(q);

  BigReal w = zq - 1;
  if (w >= threshold) {
    return BigReal::rounded(lnG_asym_without_constant(w, q) + constant, p);
  }
  // ln G(z) = ln G(z+N) - sum_{k=0}^{N-1} ln Gamma(z+k)
  //         = ln G(z+N) - N ln Gamma(z) - sum_{j=0}^{N-2} (N-1-j) ln(z+j)
  const long n = static_cast<long>(std::ceil((BigReal(threshold, q) - w).to_double()));
  BigReal shifted = lnG_asym_without_constant(w + n, q) + constant;
  BigReal gamma_sum = lngamma(zq) * n;
  for (long j = 0; j <= n - 2; ++j) gamma_sum += log(zq + j) * (n - 1 - j);
  return BigReal::rounded(shifted - gamma_sum, p);
}

BigReal log_barnes_g_asym(const BigReal& n, const BigReal& a, Precision p) {
  if (n < 1) throw DomainError("log_barnes_g_asym: n must be >= 1");
  const Precision q = internal(p);
  const BigReal nq = BigReal::rounded(n, q);
  const BigReal aq = BigReal::rounded(a, q);
  const BigReal na = nq + aq;
  BigReal r = (na * na / 2 - BigReal(1L, q) / 12) * log(nq) - nq * nq * 3 / 4 - aq * nq +
              na * log(BigReal::pi(q) * 2) / 2 + constant_cache().get(q);
  return BigReal::rounded(r, p);
}

BigReal constant_K(Precision p) {
  const Precision q = internal(p);
  BigReal r = log_barnes_g(BigReal::parse("0.5", q), q) * 2 / 3 + log(BigReal::pi(q)) / 6 -
              BigReal::ln2(q) / 36;
  return BigReal::rounded(r, p);
}

}  // namespace hdet

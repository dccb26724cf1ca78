#include "hdet/quadrature.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace hdet {

namespace {

constexpr int kRuleGuard = 6;

// Number of eigenvalues of the m x m Jacobi matrix strictly below x
// (negative pivots of J - xI).
unsigned sturm_count(long double x, const std::vector<long double>& a, const std::vector<long double>& b) {
  unsigned count = 0;
  long double d = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    d = (a[k] - x) - (k == 0 ? 0.0L : b[k] / d);
    if (d == 0) d = 1e-300L;
    if (d < 0) ++count;
  }
  return count;
}

// P_m(x) and P_m'(x) by the monic recurrence, in extended double.
void eval_ld(long double x, const std::vector<long double>& a, const std::vector<long double>& b,
             long double& pm, long double& dpm) {
  long double p0 = 1, p1 = x - a[0], d0 = 0, d1 = 1;
  for (std::size_t k = 1; k < a.size(); ++k) {
    long double p2 = (x - a[k]) * p1 - b[k] * p0;
    long double d2 = p1 + (x - a[k]) * d1 - b[k] * d0;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  pm = p1;
  dpm = d1;
}

long double refine_double(unsigned i, unsigned m, long double guess, const std::vector<long double>& a,
                          const std::vector<long double>& b) {
  // Isolate zero i (0-based, ascending): count(lo) <= i < count(hi).
  long double lo = -1, hi = 1;
  for (int it = 0; it < 200; ++it) {
    const unsigned clo = sturm_count(lo, a, b);
    const unsigned chi = sturm_count(hi, a, b);
    if (clo == i && chi == i + 1) break;
    const long double mid = (lo + hi) / 2;
    if (sturm_count(mid, a, b) <= i) lo = mid; else hi = mid;
  }
  (void)m;
  long double x = (guess > lo && guess < hi) ? guess : (lo + hi) / 2;
  long double plo, dummy;
  eval_ld(lo, a, b, plo, dummy);
  if (plo == 0) return lo;  // count(lo) <= i admits a zero exactly at lo
  for (int it = 0; it < 200; ++it) {
    long double pm, dpm;
    eval_ld(x, a, b, pm, dpm);
    if (pm == 0) return x;
    if ((pm < 0) == (plo < 0)) lo = x; else hi = x;
    long double next = dpm != 0 ? x - pm / dpm : (lo + hi) / 2;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;  // bisection fallback
    if (std::fabs(next - x) <= 4e-18L * std::fmax(1.0L, std::fabs(x))) return next;
    x = next;
    if (hi - lo <= 4e-18L) return x;
  }
  return x;
}

}  // namespace

QuadratureRule gauss_jacobi_rule(unsigned m, const JacobiParams& jp, Precision p) {
  if (m == 0) throw DomainError("gauss_jacobi_rule: order must be >= 1");
  const Precision q = p.plus(kRuleGuard);
  const RecurrenceCoeffs rc = jacobi_recurrence(m, jp);

  std::vector<long double> ad(m), bd(m);
  std::vector<BigReal> aq, bq;
  aq.reserve(m);
  bq.reserve(m);
  for (unsigned k = 0; k < m; ++k) {
    ad[k] = static_cast<long double>(rc.alpha[k].get_d());
    bd[k] = static_cast<long double>(rc.beta[k].get_d());
    aq.emplace_back(rc.alpha[k], q);
    bq.emplace_back(rc.beta[k], q);
  }

  const double a = jp.alpha().get_d();
  const double b = jp.beta().get_d();
  const BigReal tol = pow10(-q.digits(), q);
  const BigReal h_last = jacobi_hn(m - 1, jp, q);

  QuadratureRule rule;
  rule.order = m;
  rule.nodes.reserve(m);
  rule.weights.reserve(m);
  for (unsigned i = 0; i < m; ++i) {
    // Zero number k = m - i counted from x = 1 downwards.
    const double k = m - i;
    const double theta = (k - 0.25 + a / 2) * M_PI / (m + (a + b + 1) / 2);
    const long double x0 = refine_double(i, m, std::cos(theta), ad, bd);

    BigReal x(static_cast<double>(x0), q);
    BigReal pm(q), pm1(q), dpm(q);
    const auto evaluate = [&](const BigReal& t) {
      BigReal p0(1L, q), p1 = t - aq[0], d0(q), d1(1L, q);
      for (unsigned j = 1; j < m; ++j) {
        BigReal shift = t - aq[j];
        BigReal p2 = shift * p1 - bq[j] * p0;
        BigReal d2 = p1 + shift * d1 - bq[j] * d0;
        p0 = std::move(p1);
        p1 = std::move(p2);
        d0 = std::move(d1);
        d1 = std::move(d2);
      }
      pm = std::move(p1);
      pm1 = std::move(p0);
      dpm = std::move(d1);
    };
    bool converged = false;
    BigReal step(q);
    for (int it = 0; it < 64; ++it) {
      evaluate(x);
      if (dpm.is_zero()) break;
      step = pm / dpm;
      x -= step;
      if (abs(step) <= tol) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      std::ostringstream msg;
      msg << "gauss_jacobi_rule: Newton polishing of node " << i << " of " << m
          << " did not converge (alpha = " << jp.alpha().get_str() << ", beta = " << jp.beta().get_str()
          << ", last step " << step.to_string(6) << ", start " << static_cast<double>(x0) << ")";
      throw ConvergenceError(msg.str());
    }
    evaluate(x);
    BigReal w = m == 1 ? h_last : h_last / (pm1 * dpm);
    if (w.sign() <= 0 || (!rule.nodes.empty() && x <= rule.nodes.back()) || x <= -1 || x >= 1) {
      std::ostringstream msg;
      msg << "gauss_jacobi_rule: node " << i << " of " << m << " failed validation (x = " << x.to_string(20)
          << ", w = " << w.to_string(20) << ")";
      throw ConvergenceError(msg.str());
    }
    rule.nodes.push_back(BigReal::rounded(x, p));
    rule.weights.push_back(BigReal::rounded(w, p));
  }
  return rule;
}

std::vector<BigReal> perturbed_moments(unsigned count, const QuadratureRule& rule, const PerturbationFn& h,
                                       Precision p) {
  std::vector<BigReal> mu(count, BigReal(p));
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const BigReal x = BigReal::rounded(rule.nodes[i], p);
    BigReal term = BigReal::rounded(rule.weights[i], p) * h(x, p);
    for (unsigned k = 0; k < count; ++k) {
      mu[k] += term;
      term *= x;
    }
  }
  return mu;
}

BigReal perturbed_moment(unsigned k, const JacobiParams& jp, const PerturbationFn& h, unsigned m, Precision p) {
  return perturbed_moments(k + 1, gauss_jacobi_rule(m, jp, p), h, p).back();
}

ChebExpansion cheb_expand(const RealFunction& f, unsigned M, Precision p) {
  if (M == 0) throw DomainError("cheb_expand: M must be >= 1");
  // cos(pi r / M) for r = 0..2M-1; the DCT needs index jk mod 2M.
  std::vector<BigReal> cosines;
  cosines.reserve(2 * M);
  const BigReal pi = BigReal::pi(p);
  for (unsigned r = 0; r < 2 * M; ++r) cosines.push_back(cos(pi * static_cast<long>(r) / static_cast<long>(M)));

  std::vector<BigReal> values;
  values.reserve(M + 1);
  for (unsigned j = 0; j <= M; ++j) values.push_back(f(cosines[j]));

  ChebExpansion ce;
  ce.coeffs.reserve(M + 1);
  BigReal largest(p);
  for (unsigned k = 0; k <= M; ++k) {
    BigReal sum(p);
    for (unsigned j = 0; j <= M; ++j) {
      BigReal term = values[j] * cosines[(static_cast<unsigned long>(j) * k) % (2 * M)];
      if (j == 0 || j == M) term /= 2;
      sum += term;
    }
    sum *= 2;
    sum /= static_cast<long>(M);
    if (k == M) sum /= 2;
    largest = max(largest, abs(sum));
    ce.coeffs.push_back(std::move(sum));
  }
  BigReal tail = M >= 1 ? max(abs(ce.coeffs[M - 1]), abs(ce.coeffs[M]) * 2) : abs(ce.coeffs[M]);
  BigReal rounding = largest * static_cast<long>(M + 1) * pow10(1 - p.digits(), p);
  ce.tail_bound = max(tail, rounding);
  return ce;
}

ChebExpansion cheb_expand_auto(const RealFunction& f, Precision p, unsigned min_M, unsigned max_M) {
  const BigReal target = pow10(-(p.digits() / 2), p);
  for (unsigned M = min_M; M <= max_M; M *= 2) {
    ChebExpansion ce = cheb_expand(f, M, p);
    if (ce.tail_bound < target) return ce;
  }
  throw ConvergenceError("cheb_expand: Chebyshev coefficients did not decay below 1e-" +
                         std::to_string(p.digits() / 2) + " by M = " + std::to_string(max_M) +
                         " (is ln h analytic on [-1,1]?)");
}

ChebExpansion cheb_expand_log(const PerturbationFn& h, Precision p, unsigned M) {
  RealFunction f = [&h, p](const BigReal& x) { return h.log_value(x, p); };
  return M > 0 ? cheb_expand(f, M, p) : cheb_expand_auto(f, p);
}

BigReal cheb_eval(const ChebExpansion& ce, const BigReal& x) {
  if (ce.coeffs.empty()) return BigReal(x.bits() > 0 ? Precision(std::max(32, x.digits10())) : Precision(32));
  const BigReal two_x = x * 2;
  BigReal b1(ce.coeffs[0]);
  b1 -= ce.coeffs[0];  // zero at the coefficient precision
  BigReal b2 = b1;
  for (std::size_t k = ce.coeffs.size() - 1; k >= 1; --k) {
    BigReal b0 = two_x * b1 - b2 + ce.coeffs[k];
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  return x * b1 - b2 + ce.coeffs[0] / 2;
}

}  // namespace hdet

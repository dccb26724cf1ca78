#include "hdet/hankel.hpp"

#include <cmath>
#include <sstream>

#include "hdet/rational.hpp"

namespace hdet {

int policy_digits(unsigned n) {
  return std::max(64, static_cast<int>(std::ceil(1.4 * n)) + 32);
}

Precision working_precision(unsigned n, Precision p) {
  return p.plus(static_cast<int>(std::ceil(0.8 * n)) + 10);
}

const char* to_string(HankelResult::Method m) {
  switch (m) {
    case HankelResult::Method::ldl: return "ldl";
    case HankelResult::Method::recurrence: return "recurrence";
    case HankelResult::Method::rational: return "rational";
  }
  return "?";
}

MomentSequence pure_moment_sequence(unsigned count, const JacobiParams& jp, Precision p) {
  MomentSequence ms;
  ms.mu = jacobi_moments(count, jp, p);
  ms.modified.assign(count, BigReal(p));
  if (count > 0) ms.modified[0] = jacobi_hn(0, jp, p);
  ms.source = "pure";
  return ms;
}

MomentSequence perturbed_moment_sequence(unsigned count, const JacobiParams& jp, const PerturbationFn& h, unsigned m,
                                         Precision p) {
  const QuadratureRule rule = gauss_jacobi_rule(m, jp, p);
  const RecurrenceCoeffs rc = jacobi_recurrence(std::max(count, 1u), jp);
  std::vector<BigReal> a, b;
  for (unsigned k = 0; k < count; ++k) {
    a.emplace_back(rc.alpha[k], p);
    b.emplace_back(rc.beta[k], p);
  }

  MomentSequence ms;
  ms.mu.assign(count, BigReal(p));
  ms.modified.assign(count, BigReal(p));
  ms.source = "perturbed(" + h.source() + ")";
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const BigReal& x = rule.nodes[i];
    const BigReal wh = rule.weights[i] * h(x, p);
    BigReal power = wh;
    BigReal prev(p), cur = wh;  // wh * pi_{k-1}(x), wh * pi_k(x)
    for (unsigned k = 0; k < count; ++k) {
      ms.mu[k] += power;
      power *= x;
      ms.modified[k] += cur;
      BigReal next = (x - a[k]) * cur - b[k] * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return ms;
}

BigReal cross_validation_tolerance(unsigned n, Precision p) {
  return pow10(16 - p.digits(), p) * static_cast<long>(n);
}

HankelResult hankel_logdet_ldl(const MomentSequence& ms, unsigned n, Precision p) {
  if (n == 0) throw DomainError("hankel_logdet_ldl: n must be >= 1");
  if (ms.mu.size() < 2 * static_cast<std::size_t>(n) - 1)
    throw DomainError("hankel_logdet_ldl: need moments up to index " + std::to_string(2 * n - 2));
  Precision q(32);
  for (unsigned k = 0; k + 1 < 2 * n; ++k) q = Precision(std::max(q.digits(), ms.mu[k].digits10()));
  q = Precision(std::max(q.digits(), p.digits()));

  // Lower triangle of the Hankel matrix, eliminated in place.
  std::vector<std::vector<BigReal>> a(n);
  BigReal max_diag(q);
  for (unsigned i = 0; i < n; ++i) {
    a[i].reserve(i + 1);
    for (unsigned j = 0; j <= i; ++j) a[i].push_back(BigReal::rounded(ms.mu[i + j], q));
    max_diag = max(max_diag, abs(a[i][i]));
  }

  BigReal log_det(q), min_ratio(q), growth(1L, q);
  bool first = true;
  for (unsigned k = 0; k < n; ++k) {
    const BigReal& pivot = a[k][k];
    if (pivot.sign() <= 0)
      throw PrecisionError("matrix not positive definite at requested precision: pivot " + pivot.to_string(6), k);
    log_det += log(pivot);
    BigReal ratio = pivot / max_diag;
    if (first || ratio < min_ratio) min_ratio = ratio;
    first = false;
    growth = max(growth, BigReal::rounded(ms.mu[2 * k], q) / pivot);
    for (unsigned i = k + 1; i < n; ++i) {
      const BigReal l = a[i][k] / pivot;
      for (unsigned j = k + 1; j <= i; ++j) a[i][j] -= l * a[j][k];
    }
  }

  HankelResult r;
  r.n = n;
  r.method = HankelResult::Method::ldl;
  r.precision_used = q;
  r.log_det = BigReal::rounded(log_det, q);
  r.min_pivot = BigReal::rounded(min_ratio, p);
  // Each pivot carries a relative error of order eps * (original diagonal /
  // pivot); the sum over n pivots bounds the error of the logarithm.
  BigReal bound = pow10(-q.digits(), q) * growth * static_cast<long>(4 * n);
  bound += pow10(-p.digits(), q) * max(BigReal(1L, q), abs(log_det));
  r.error_bound = BigReal::rounded(bound, p);
  return r;
}

HankelResult hankel_logdet_recurrence(const MomentSequence& ms, unsigned n, const JacobiParams& jp, Precision p) {
  if (n == 0) throw DomainError("hankel_logdet_recurrence: n must be >= 1");
  const std::size_t need = 2 * static_cast<std::size_t>(n) - 1;
  if (ms.modified.size() < need && ms.mu.size() < need)
    throw DomainError("hankel_logdet_recurrence: need moments up to index " + std::to_string(2 * n - 2));

  Precision q = p;
  const std::vector<BigReal>& src = ms.modified.size() >= need ? ms.modified : ms.mu;
  for (std::size_t k = 0; k < need; ++k) q = Precision(std::max(q.digits(), src[k].digits10()));

  const unsigned len = static_cast<unsigned>(need);
  const RecurrenceCoeffs rc = jacobi_recurrence(len, jp);
  std::vector<BigReal> a, b;
  for (unsigned k = 0; k < len; ++k) {
    a.emplace_back(rc.alpha[k], q);
    b.emplace_back(rc.beta[k], q);
  }

  std::vector<BigReal> nu;
  if (ms.modified.size() >= need) {
    for (unsigned k = 0; k < len; ++k) nu.push_back(BigReal::rounded(ms.modified[k], q));
  } else {
    // nu_k = sum_j c_{k,j} mu_j with pi_k(x) = sum_j c_{k,j} x^j.
    std::vector<BigReal> prev, cur{BigReal(1L, q)};
    for (unsigned k = 0; k < len; ++k) {
      BigReal s(q);
      for (std::size_t j = 0; j < cur.size(); ++j) s += cur[j] * ms.mu[j];
      nu.push_back(std::move(s));
      std::vector<BigReal> next(cur.size() + 1, BigReal(q));
      for (std::size_t j = 0; j < cur.size(); ++j) {
        next[j + 1] += cur[j];
        next[j] -= a[k] * cur[j];
      }
      for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= b[k] * prev[j];
      prev = std::move(cur);
      cur = std::move(next);
    }
  }

  // Modified Chebyshev algorithm; row k holds sigma_{k,l} for l = k..len-1-k.
  std::vector<BigReal> older(len, BigReal(q)), old = nu, row(len, BigReal(q));
  BigReal alpha_k = a[0] + nu[1 % len] / nu[0];
  if (len == 1) alpha_k = a[0];
  BigReal beta_k = nu[0];
  BigReal log_det(q), min_ratio(1L, q);
  if (nu[0].sign() <= 0) throw PrecisionError("modified-moment recurrence broke down: h_0 <= 0", 0);
  log_det += log(nu[0]);

  for (unsigned k = 1; k < n; ++k) {
    for (unsigned l = k; l + k < len; ++l) {
      BigReal s = old[l + 1] - (alpha_k - a[l]) * old[l] + b[l] * old[l - 1];
      if (k >= 2) s -= beta_k * older[l];
      row[l] = std::move(s);
    }
    const BigReal& hk = row[k];
    if (hk.sign() <= 0)
      throw PrecisionError("modified-moment recurrence broke down: h_k = " + hk.to_string(6), k);
    log_det += log(hk);
    // Relative to the pure-Jacobi norm, which is the natural scale of h_k.
    BigReal ratio = hk / jacobi_hn(k, jp, q);
    if (ratio < min_ratio) min_ratio = ratio;
    BigReal next_alpha = a[k] + (k + 1 + k < len ? row[k + 1] / hk : BigReal(q)) - old[k] / old[k - 1];
    BigReal next_beta = hk / old[k - 1];
    older = std::move(old);
    old = row;
    alpha_k = std::move(next_alpha);
    beta_k = std::move(next_beta);
  }

  HankelResult r;
  r.n = n;
  r.method = HankelResult::Method::recurrence;
  r.precision_used = q;
  r.log_det = BigReal::rounded(log_det, q);
  r.min_pivot = BigReal::rounded(min_ratio, p);
  BigReal bound = pow10(-q.digits(), q) * static_cast<long>(16 * n) / min(min_ratio, BigReal(1L, q));
  bound += pow10(-p.digits(), q) * max(BigReal(1L, q), abs(log_det));
  r.error_bound = BigReal::rounded(bound, p);
  return r;
}

HankelResult hankel_logdet_rational(unsigned n, const JacobiParams& jp, const PerturbationFn& h, Precision p) {
  if (n == 0) throw DomainError("hankel_logdet_rational: n must be >= 1");
  if (!jp.integer_exponents())
    throw DomainError("rational method needs nonnegative integer alpha and beta");
  auto poly = h.rational_polynomial();
  if (!poly) throw DomainError("rational method needs h to be a polynomial with rational coefficients");
  const auto weight = exact::jacobi_weight_polynomial(static_cast<unsigned>(jp.alpha().get_num().get_ui()),
                                                      static_cast<unsigned>(jp.beta().get_num().get_ui()), *poly);
  const auto mu = exact::moments(weight, 2 * n - 1);
  mpq_class det = exact::hankel_determinant(mu, n);
  if (sgn(det) <= 0) throw PrecisionError("exact Hankel determinant is not positive", n);

  HankelResult r;
  r.n = n;
  r.method = HankelResult::Method::rational;
  r.precision_used = p;
  const Precision q = p.plus(4);
  r.log_det = BigReal::rounded(log(BigReal(det, q)), p);
  r.error_bound = pow10(-p.digits(), p) * max(BigReal(1L, p), abs(r.log_det));
  r.min_pivot = BigReal(p);
  r.exact = det;
  return r;
}

HankelResult perturbed_logdet(unsigned n, const JacobiParams& jp, const PerturbationFn& h, Precision p,
                              HankelResult::Method method, unsigned quad_order) {
  if (method == HankelResult::Method::rational) return hankel_logdet_rational(n, jp, h, p);
  const Precision q = working_precision(n, p);
  const unsigned m = quad_order > 0 ? quad_order : default_quad_order(n);
  const MomentSequence ms = h.is_identity() ? pure_moment_sequence(2 * n, jp, q)
                                            : perturbed_moment_sequence(2 * n, jp, h, m, q);
  HankelResult r = method == HankelResult::Method::ldl ? hankel_logdet_ldl(ms, n, p)
                                                       : hankel_logdet_recurrence(ms, n, jp, p);
  r.log_det = BigReal::rounded(r.log_det, p);
  r.precision_used = p;
  return r;
}

BigReal heine_average_small_n(unsigned n, const JacobiParams& jp, const PerturbationFn& h, Precision p,
                              unsigned order) {
  if (n < 1 || n > 3) throw DomainError("heine_average_small_n: n must be 1, 2 or 3");
  const Precision q = p.plus(10);
  const unsigned m = order > 0 ? order : std::max(20u, static_cast<unsigned>(p.digits() / 2)) + n;
  const QuadratureRule rule = gauss_jacobi_rule(m, jp, q);
  std::vector<BigReal> hv;
  for (const auto& x : rule.nodes) hv.push_back(h(x, q));

  BigReal num(q), den(q);
  std::vector<unsigned> idx(n, 0);
  for (;;) {
    BigReal w(1L, q), hprod(1L, q);
    for (unsigned l = 0; l < n; ++l) {
      w *= rule.weights[idx[l]];
      hprod *= hv[idx[l]];
    }
    for (unsigned j = 0; j < n; ++j)
      for (unsigned k = j + 1; k < n; ++k) {
        const BigReal d = rule.nodes[idx[k]] - rule.nodes[idx[j]];
        w *= d * d;
      }
    den += w;
    num += w * hprod;

    unsigned l = 0;
    while (l < n && ++idx[l] == m) idx[l++] = 0;
    if (l == n) break;
  }
  return BigReal::rounded(num / den, p);
}

}  // namespace hdet

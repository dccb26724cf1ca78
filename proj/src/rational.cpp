#include "hdet/rational.hpp"

#include <stdexcept>
#include <utility>

#include "hdet/errors.hpp"

namespace hdet::exact {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Polynomial jacobi_weight_polynomial(unsigned alpha, unsigned beta, const Polynomial& h) {
  Polynomial w{mpq_class(1)};
  const Polynomial one_minus_x{mpq_class(1), mpq_class(-1)};
  const Polynomial one_plus_x{mpq_class(1), mpq_class(1)};
  for (unsigned i = 0; i < alpha; ++i) w = multiply(w, one_minus_x);
  for (unsigned i = 0; i < beta; ++i) w = multiply(w, one_plus_x);
  return multiply(w, h);
}

std::vector<mpq_class> moments(const Polynomial& weight, unsigned count) {
  std::vector<mpq_class> mu(count, mpq_class(0));
  for (unsigned k = 0; k < count; ++k) {
    for (std::size_t j = 0; j < weight.size(); ++j) {
      const std::size_t deg = k + j;
      if (deg % 2 == 0) mu[k] += weight[j] * mpq_class(2, static_cast<unsigned long>(deg + 1));
    }
    mu[k].canonicalize();
  }
  return mu;
}

mpq_class hankel_determinant(const std::vector<mpq_class>& mu, unsigned n) {
  if (n == 0) return mpq_class(1);
  if (mu.size() < 2 * static_cast<std::size_t>(n) - 1) {
    throw DomainError("hankel_determinant: need moments up to index 2n-2");
  }
  mpz_class lcm(1);
  for (std::size_t k = 0; k + 1 < 2 * static_cast<std::size_t>(n); ++k) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), mu[k].get_den_mpz_t());
  }
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned k = 0; k < n; ++k) {
      const mpq_class& v = mu[j + k];
      m[j][k] = v.get_num() * (lcm / v.get_den());
    }
  }
  // Bareiss: after step k every entry of the trailing block is a k+1 minor.
  int sign = 1;
  mpz_class prev(1);
  for (unsigned k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      unsigned r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return mpq_class(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (unsigned i = k + 1; i < n; ++i) {
      for (unsigned j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  mpz_class lcm_pow;
  mpz_pow_ui(lcm_pow.get_mpz_t(), lcm.get_mpz_t(), n);
  mpq_class det(mpz_class(sign * m[n - 1][n - 1]), lcm_pow);
  det.canonicalize();
  return det;
}

namespace {

mpq_class inner(const Polynomial& p, const Polynomial& q, const std::vector<mpq_class>& mu) {
  mpq_class s(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (i + j >= mu.size()) throw DomainError("gram_schmidt_recurrence: not enough moments");
      s += p[i] * q[j] * mu[i + j];
    }
  }
  return s;
}

}  // namespace

void gram_schmidt_recurrence(const std::vector<mpq_class>& mu, unsigned count,
                             std::vector<mpq_class>& alpha, std::vector<mpq_class>& beta) {
  alpha.assign(count, mpq_class(0));
  beta.assign(count, mpq_class(0));
  Polynomial prev;                 // P_{k-1}
  Polynomial cur{mpq_class(1)};    // P_k
  mpq_class prev_norm(0);
  for (unsigned k = 0; k < count; ++k) {
    Polynomial xcur(cur.size() + 1, mpq_class(0));
    for (std::size_t i = 0; i < cur.size(); ++i) xcur[i + 1] = cur[i];
    const mpq_class norm = inner(cur, cur, mu);
    if (norm <= 0) throw DomainError("gram_schmidt_recurrence: moment functional not positive");
    alpha[k] = inner(xcur, cur, mu) / norm;
    if (k > 0) beta[k] = norm / prev_norm;
    Polynomial next = xcur;
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] -= alpha[k] * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= beta[k] * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
    prev_norm = norm;
  }
}

}  // namespace hdet::exact

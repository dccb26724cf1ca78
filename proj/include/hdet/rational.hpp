#pragma once

// Exact rational pipeline for integer Jacobi exponents and polynomial
// perturbations with rational coefficients: moments by exact integration,
// Hankel determinants by fraction-free (Bareiss) elimination, and recurrence
// coefficients by Gram-Schmidt. This is the bit-exact ground truth the
// floating routes are checked against.

#include <vector>

#include <gmpxx.h>

namespace hdet::exact {

/// Coefficients c_0 + c_1 x + ... of a polynomial.
using Polynomial = std::vector<mpq_class>;

Polynomial multiply(const Polynomial& a, const Polynomial& b);

/// (1-x)^alpha (1+x)^beta h(x) expanded in powers of x.
Polynomial jacobi_weight_polynomial(unsigned alpha, unsigned beta, const Polynomial& h = {mpq_class(1)});

/// mu_k = integral_{-1}^{1} x^k w(x) dx for k < count.
std::vector<mpq_class> moments(const Polynomial& weight, unsigned count);

/// det(mu_{j+k})_{j,k<n}. Denominators are cleared first so the elimination
/// runs over the integers.
mpq_class hankel_determinant(const std::vector<mpq_class>& mu, unsigned n);

/// Monic recurrence coefficients alpha_k, beta_k (k < count) by Gram-Schmidt
/// on the moment functional; beta[0] = 0. Needs mu up to index 2*count-1.
void gram_schmidt_recurrence(const std::vector<mpq_class>& mu, unsigned count,
                             std::vector<mpq_class>& alpha, std::vector<mpq_class>& beta);

}  // namespace hdet::exact

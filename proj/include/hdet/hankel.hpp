#pragma once

// Hankel determinants D_n = det(mu_{j+k})_{j,k<n} of w_{alpha,beta} h.

#include <optional>
#include <string>
#include <vector>

#include "hdet/bigreal.hpp"
#include "hdet/jacobi.hpp"
#include "hdet/perturbation.hpp"
#include "hdet/quadrature.hpp"

namespace hdet {

/// Digits used for a determinant of size n unless the caller overrides:
/// max(64, ceil(1.4 n) + 32).
int policy_digits(unsigned n);

/// Internal precision for moments and factorization at size n. The Hankel
/// matrix loses about 0.6 n digits to conditioning, so the factorization runs
/// ceil(0.8 n) + 10 digits above the requested precision.
Precision working_precision(unsigned n, Precision p);

/// Default Gauss-Jacobi order for the moments of a size-n determinant.
inline unsigned default_quad_order(unsigned n) { return n + 32; }

struct MomentSequence {
  /// Ordinary moments mu_0, mu_1, ...
  std::vector<BigReal> mu;
  /// Moments against the monic Jacobi polynomials of the same (alpha, beta),
  /// when they were computed alongside mu.
  std::vector<BigReal> modified;
  /// "pure" or "perturbed(<h source>)".
  std::string source;
};

/// Closed-form moments of w_{alpha,beta}; modified moments are (h_0, 0, ...).
MomentSequence pure_moment_sequence(unsigned count, const JacobiParams& jp, Precision p);

/// Moments of w_{alpha,beta} h from one Gauss-Jacobi rule of order m.
MomentSequence perturbed_moment_sequence(unsigned count, const JacobiParams& jp, const PerturbationFn& h, unsigned m,
                                         Precision p);

struct HankelResult {
  enum class Method { ldl, recurrence, rational };

  unsigned n = 0;
  BigReal log_det;
  Method method = Method::ldl;
  Precision precision_used{Precision::kMinDigits};
  /// Rough bound on |error| of log_det from rounding and pivot growth.
  BigReal error_bound;
  /// Smallest pivot (ldl) or smallest h_k (recurrence), relative to the
  /// largest diagonal entry.
  BigReal min_pivot;
  /// Exact determinant, rational method only.
  std::optional<mpq_class> exact;
};

const char* to_string(HankelResult::Method m);

/// Symmetric triangular factorization of the n x n Hankel matrix; ln D_n is
/// the sum of the logarithms of the pivots. Throws PrecisionError naming the
/// first nonpositive pivot.
HankelResult hankel_logdet_ldl(const MomentSequence& ms, unsigned n, Precision p);

/// ln D_n = sum_{k<n} ln h_k with h_k from the modified Chebyshev algorithm
/// on the monic Jacobi basis. Needs 2n - 1 moments.
HankelResult hankel_logdet_recurrence(const MomentSequence& ms, unsigned n, const JacobiParams& jp, Precision p);

/// Exact determinant for integer alpha, beta and polynomial h with rational
/// coefficients. Throws DomainError otherwise.
HankelResult hankel_logdet_rational(unsigned n, const JacobiParams& jp, const PerturbationFn& h, Precision p);

/// Tolerance on |ldl - recurrence|: 10^(16 - digits) n.
BigReal cross_validation_tolerance(unsigned n, Precision p);

/// Convenience: builds the moments at working_precision and factors them.
/// `quad_order` 0 means default_quad_order(n).
HankelResult perturbed_logdet(unsigned n, const JacobiParams& jp, const PerturbationFn& h, Precision p,
                              HankelResult::Method method = HankelResult::Method::ldl, unsigned quad_order = 0);

/// < prod_l h(x_l) > over the n-point Jacobi ensemble, by tensor-product
/// Gauss-Jacobi quadrature of both n-fold integrals; n <= 3. `order` 0
/// picks max(20, digits/2) + n points per axis.
BigReal heine_average_small_n(unsigned n, const JacobiParams& jp, const PerturbationFn& h, Precision p,
                              unsigned order = 0);

}  // namespace hdet

#include "hdet/linstat.hpp"

namespace hdet {

namespace {

Precision precision_of(const ChebExpansion& ce) {
  int d = Precision::kMinDigits;
  for (const auto& c : ce.coeffs) d = std::max(d, c.digits10());
  return Precision(d);
}

}  // namespace

ChebExpansion hilbert_transform_cheb(const ChebExpansion& ce, Kernel kernel) {
  const Precision p = precision_of(ce);
  const BigReal pi = BigReal::pi(p);
  ChebExpansion out;
  out.coeffs.reserve(ce.coeffs.size());
  for (std::size_t k = 0; k < ce.coeffs.size(); ++k) {
    BigReal c = ce.coeffs[k] * pi * static_cast<long>(k);
    out.coeffs.push_back(kernel == Kernel::y_minus_x ? -c : c);
  }
  out.tail_bound = ce.tail_bound * pi * static_cast<long>(std::max<std::size_t>(ce.coeffs.size(), 1));
  return out;
}

BigReal pv_double_integral(const ChebExpansion& ce) {
  const Precision p = precision_of(ce);
  BigReal sum(p);
  for (std::size_t k = 1; k < ce.coeffs.size(); ++k) sum += ce.coeffs[k] * ce.coeffs[k] * static_cast<long>(k);
  return sum / 8;
}

BigReal pv_double_integral_quadrature(const ChebExpansion& ce, Precision p) {
  const ChebExpansion inner = hilbert_transform_cheb(ce, Kernel::x_minus_y);
  // Chebyshev-Gauss with N nodes is exact for degree 2N-1 against
  // 1/sqrt(1-x^2); the integrand has degree 2M.
  const unsigned N = ce.degree() + 2;
  const BigReal pi = BigReal::pi(p);
  BigReal sum(p);
  for (unsigned j = 0; j < N; ++j) {
    const BigReal x = cos(pi * static_cast<long>(2 * j + 1) / static_cast<long>(2 * N));
    sum += cheb_eval(ce, x) * cheb_eval(inner, x);
  }
  // (1/4 pi^2) (pi/N) sum
  return BigReal::rounded(sum / (pi * static_cast<long>(4 * N)), p);
}

BigReal mean_term(const ChebExpansion& ce, unsigned n, const JacobiParams& jp, MeanForm form, Precision p) {
  if (form == MeanForm::limit) {
    const BigReal level(mpq_class(n) + jp.sum() / 2, p);
    return BigReal::rounded(level * ce.coeffs.at(0) / 2, p);
  }
  const SupportInterval si = support_endpoints(n, jp, p);
  return density_integral(si, [&ce](const BigReal& x) { return cheb_eval(ce, x); }, p);
}

LinStatTerms linstat_terms(const ChebExpansion& ce, unsigned n, const JacobiParams& jp, MeanForm form,
                           Precision p) {
  LinStatTerms t;
  t.n = n;
  t.form = form;
  t.mean_term = mean_term(ce, n, jp, form, p);
  if (form == MeanForm::limit) {
    t.variance_term = BigReal::rounded(pv_double_integral(ce), p);
  } else {
    const SupportInterval si = support_endpoints(n, jp, p);
    const BigReal R = si.centre(), r = si.half_width();
    const ChebExpansion g =
        cheb_expand([&](const BigReal& s) { return cheb_eval(ce, R + r * s); }, std::max(ce.degree(), 1u), p);
    t.variance_term = BigReal::rounded(pv_double_integral(g), p);
  }
  return t;
}

AsymptoticPrediction assemble_prediction(unsigned n, const JacobiParams& jp, const PerturbationFn& h,
                                         const ChebExpansion& ce, Precision p) {
  if (!jp.asymptotic_valid())
    throw ValidityError("outside stated validity of the asymptotic formula (alpha, beta >= -1/2)");
  if (n == 0) throw DomainError("assemble_prediction: n must be >= 1");
  const Precision q = p.plus(4);
  AsymptoticPrediction ap;
  ap.n = n;
  ap.cheb_degree = ce.degree();
  const BigReal half_c0 = BigReal::rounded(ce.coeffs.at(0), q) / 2;
  ap.log_leading = BigReal::rounded(jacobi_log_leading(n, jp, q), p);
  ap.log_mean = BigReal::rounded(half_c0 * static_cast<long>(n), p);
  ap.log_C.pv_part = BigReal::rounded(pv_double_integral(ce), p);
  ap.log_C.boundary_part = BigReal::rounded(BigReal(jp.sum() / 2, q) * half_c0, p);
  ap.log_C.pure_constant_part = BigReal::rounded(jacobi_log_constant(jp, q), p);
  const BigReal one(1L, q);
  BigReal corr = jp.alpha_real(q) * h.log_value(one, q) + jp.beta_real(q) * h.log_value(-one, q);
  ap.endpoint_correction = BigReal::rounded(-corr / 2, p);
  return ap;
}

AsymptoticPrediction assemble_prediction(unsigned n, const JacobiParams& jp, const PerturbationFn& h, Precision p,
                                         unsigned cheb_m) {
  if (!jp.asymptotic_valid())
    throw ValidityError("outside stated validity of the asymptotic formula (alpha, beta >= -1/2)");
  return assemble_prediction(n, jp, h, cheb_expand_log(h, p.plus(4), cheb_m), p);
}

}  // namespace hdet

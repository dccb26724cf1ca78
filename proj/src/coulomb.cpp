#include "hdet/coulomb.hpp"

namespace hdet {

BigReal v_prime(const BigReal& x, const JacobiParams& jp) {
  const Precision p(std::max(Precision::kMinDigits, x.digits10()));
  const BigReal one(1L, p);
  if (x == one || x == -one) throw DomainError("v'(x) has a pole at x = " + x.to_string(3));
  return -jp.alpha_real(p) / (x - 1) - jp.beta_real(p) / (x + 1);
}

SupportInterval support_endpoints(unsigned n, const JacobiParams& jp, Precision p, EndpointForm form) {
  if (n == 0) throw DomainError("support_endpoints: n must be >= 1");
  const Precision q = p.plus(4);
  const mpq_class nn(n);
  const mpq_class product = nn * (nn + jp.alpha()) * (nn + jp.beta()) * (nn + jp.sum());
  const mpq_class diff = jp.beta() * jp.beta() - jp.alpha() * jp.alpha();
  mpq_class denom = 2 * nn + jp.sum() + (form == EndpointForm::printed ? 2 : 0);
  denom *= denom;

  const BigReal root = sqrt(BigReal(product, q)) * 4;
  const BigReal d(denom, q), c(diff, q);
  SupportInterval si;
  si.n = n;
  si.jp = jp;
  si.form = form;
  si.a = BigReal::rounded((c - root) / d, p);
  si.b = BigReal::rounded((c + root) / d, p);
  return si;
}

EndpointResiduals endpoint_residuals(const SupportInterval& si, Precision p) {
  const Precision q = p.plus(4);
  const BigReal a = BigReal::rounded(si.a, q), b = BigReal::rounded(si.b, q);
  const BigReal one(1L, q);
  const BigReal A = sqrt(max(BigReal(q), (one - a) * (one - b)));
  const BigReal B = sqrt(max(BigReal(q), (one + a) * (one + b)));
  const BigReal al = si.jp.alpha_real(q), be = si.jp.beta_real(q);
  const BigReal level = BigReal(mpq_class(si.n) + si.jp.sum() / 2, q);
  EndpointResiduals r;
  r.first = BigReal::rounded(level * A * B - al * B / 2 - be * A / 2, p);
  r.second = BigReal::rounded(al * B - be * A, p);
  return r;
}

BigReal equilibrium_density(const BigReal& x, const SupportInterval& si, Precision p) {
  const Precision q = p.plus(4);
  const BigReal one(1L, q);
  if (x < si.a || x > si.b)
    throw DomainError("equilibrium_density: x = " + x.to_string(10) + " outside the support [" +
                      si.a.to_string(10) + ", " + si.b.to_string(10) + "]");
  if (x == one || x == -one) throw DomainError("equilibrium_density: unbounded at x = " + x.to_string(3));
  if (x == si.a || x == si.b) return BigReal(p);
  const BigReal level(mpq_class(si.n) + si.jp.sum() / 2, q);
  const BigReal xx = BigReal::rounded(x, q);
  BigReal num = level * sqrt((si.b - xx) * (xx - si.a));
  return BigReal::rounded(num / (BigReal::pi(q) * (one - xx * xx)), p);
}

BigReal density_integral(const SupportInterval& si, const RealFunction& f, Precision p) {
  // 1/(1-x^2) = (1/(1-x) + 1/(1+x))/2. Subtracting f(+-1) leaves a smooth
  // integrand against sqrt((b-x)(x-a)); the subtracted pieces are
  //   integral sqrt((b-x)(x-a))/(c-x) dx = pi ((c-R) - sqrt((c-a)(c-b)))
  // for c outside (a,b), which stays accurate when a or b approaches +-1.
  const Precision q = p.plus(10);
  const BigReal one(1L, q);
  const BigReal a = BigReal::rounded(si.a, q), b = BigReal::rounded(si.b, q);
  const BigReal R = (a + b) / 2, r = (b - a) / 2;
  const BigReal pi = BigReal::pi(q);
  const BigReal level(mpq_class(si.n) + si.jp.sum() / 2, q);
  const BigReal f_hi = f ? BigReal::rounded(f(one), q) : one;
  const BigReal f_lo = f ? BigReal::rounded(f(-one), q) : one;
  const BigReal A = sqrt(max(BigReal(q), (one - a) * (one - b)));
  const BigReal B = sqrt(max(BigReal(q), (one + a) * (one + b)));
  const BigReal closed = pi * (f_hi * ((one - R) - A) + f_lo * ((one + R) - B));
  if (!f) return BigReal::rounded(level * closed / (pi * 2), p);

  // Gauss-Chebyshev of the second kind on x = R + r t.
  const auto smooth = [&](unsigned N) {
    BigReal sum(q);
    for (unsigned j = 1; j <= N; ++j) {
      const BigReal t = pi * static_cast<long>(j) / static_cast<long>(N + 1);
      const BigReal st = sin(t), x = R + r * cos(t);
      const BigReal fx = BigReal::rounded(f(x), q);
      BigReal g(q);
      if (one - x > 0) g += (fx - f_hi) / (one - x);
      if (one + x > 0) g += (fx - f_lo) / (one + x);
      sum += g * st * st;
    }
    return sum * r * r * pi / static_cast<long>(N + 1);
  };
  const BigReal tol = pow10(-(p.digits() / 2), q);
  BigReal prev = smooth(64);
  for (unsigned N = 128; N <= (1u << 16); N *= 2) {
    BigReal cur = smooth(N);
    if (abs(cur - prev) <= tol * max(one, abs(cur))) return BigReal::rounded(level * (closed + cur) / (pi * 2), p);
    prev = std::move(cur);
  }
  throw ConvergenceError("density_integral: quadrature did not settle");
}

BigReal density_mass(const SupportInterval& si, Precision p) { return density_integral(si, nullptr, p); }

FluidRecurrence fluid_recurrence(unsigned n, const JacobiParams& jp, Precision p, EndpointForm form) {
  const SupportInterval si = support_endpoints(n, jp, p.plus(4), form);
  const mpq_class nn(n);
  mpq_class d = 2 * nn + jp.sum();
  d *= d;
  FluidRecurrence fr;
  fr.R = BigReal::rounded(si.centre(), p);
  fr.r = BigReal::rounded(si.half_width(), p);
  fr.alpha_tilde = fr.R;
  const BigReal w = si.b - si.a;
  fr.beta_tilde = BigReal::rounded(w * w / 16, p);
  fr.alpha_tilde_closed = BigReal((jp.beta() * jp.beta() - jp.alpha() * jp.alpha()) / d, p);
  fr.beta_tilde_closed =
      BigReal(4 * nn * (nn + jp.alpha()) * (nn + jp.beta()) * (nn + jp.sum()) / (d * d), p);
  return fr;
}

}  // namespace hdet

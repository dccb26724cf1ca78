// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hdet/coulomb.hpp"
#include "hdet/hankel.hpp"
#include "hdet/jacobi.hpp"
#include "hdet/linstat.hpp"
#include "hdet/perturbation.hpp"
#include "hdet/quadrature.hpp"
#include "hdet/rational.hpp"
#include "hdet/specfun.hpp"

using namespace hdet;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures += " [failed: " + what + "]";
    }
  }
};

std::string sci(const BigReal& x) { return x.to_string(4); }

const std::vector<mpq_class> kHalfSteps{0, mpq_class(1, 2), 1, mpq_class(3, 2)};

void criterion_1(Outcome& o) {
  const Precision p(64);
  const BigReal tol = pow10(8 - 64, p);
  BigReal worst(p);
  for (const auto& a : kHalfSteps)
    for (const auto& b : kHalfSteps) {
      const JacobiParams jp(a, b);
      BigReal norms(p);
      for (unsigned n = 1; n <= 15; ++n) {
        norms += jacobi_log_hn(n - 1, jp, p);
        const BigReal barnes = jacobi_logdet_exact(n, jp, p);
        const auto ms = pure_moment_sequence(2 * n, jp, working_precision(n, p));
        const BigReal ldl = hankel_logdet_ldl(ms, n, p).log_det;
        for (const BigReal& e : {relative_difference(barnes, norms), relative_difference(barnes, ldl),
                                 relative_difference(norms, ldl)})
          worst = max(worst, e);
      }
    }
  o.detail << "worst pairwise relative difference " << sci(worst) << " (tolerance 1e-56)";
  o.require(worst <= tol, "tolerance");
}

void criterion_2(Outcome& o) {
  const Precision p(80);
  const BigReal tol = pow10(-70, p);
  BigReal worst(p);
  unsigned cases = 0;
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; b <= 2; ++b) {
      const JacobiParams jp(a, b);
      const auto mu = exact::moments(exact::jacobi_weight_polynomial(a, b), 23);
      for (unsigned n = 1; n <= 12; ++n) {
        const BigReal det(exact::hankel_determinant(mu, n), p);
        worst = max(worst, relative_difference(exp(jacobi_logdet_exact(n, jp, p)), det));
        ++cases;
      }
    }
  o.detail << cases << " determinants, worst relative difference " << sci(worst) << " at 80 digits (tolerance 1e-70)";
  o.require(worst <= tol, "tolerance");
}

void criterion_3(Outcome& o) {
  const unsigned ns[] = {25, 50, 100, 200};
  BigReal gap200;
  unsigned pairs = 0;
  for (const auto& a : kHalfSteps)
    for (const auto& b : kHalfSteps) {
      const JacobiParams jp(a, b);
      std::vector<BigReal> gaps;
      for (unsigned n : ns) {
        const Precision p(64);
        gaps.push_back(abs(jacobi_logdet_exact(n, jp, p) - jacobi_logdet_asym(n, jp, p)));
      }
      // For |alpha| = |beta| = 1/2 the asymptotic form is exact and every gap
      // sits at the rounding floor.
      const BigReal floor = pow10(-58, Precision(64));
      bool monotone = true;
      for (std::size_t i = 1; i < gaps.size(); ++i)
        monotone = monotone && (gaps[i] < gaps[i - 1] || (gaps[i] <= floor && gaps[i - 1] <= floor));
      o.require(monotone, "monotone decrease for alpha=" + a.get_str() + ", beta=" + b.get_str());
      if (a == 0 && b == 0) gap200 = gaps.back();
      ++pairs;
    }
  const Precision p(64);
  const BigReal logdet = jacobi_logdet_exact(200, JacobiParams(0, 0), p);
  const BigReal hilbert = abs(exp(logdet / 200L) * pow(BigReal(2L, p), 199) / BigReal::pi(p) - 1L);
  o.detail << "monotone over n=25..200 for " << pairs << " pairs; |exact-asym| at n=200 " << sci(gap200)
           << "; Hilbert ratio deviation " << sci(hilbert);
  o.require(gap200 < pow10(-2, p), "n=200 gap below 1e-2");
  o.require(hilbert <= BigReal(0.05, p), "Hilbert check within 0.05");
}

void criterion_4(Outcome& o) {
  const Precision p(40);
  const BigReal tol = pow10(-20, p);
  BigReal worst(p);
  const PerturbationFn hs[] = {PerturbationFn::exp_linear(1), PerturbationFn::one_plus_cx2(mpq_class(1, 2))};
  for (const mpq_class a : {mpq_class(0), mpq_class(1, 2)})
    for (const mpq_class b : {mpq_class(0), mpq_class(1, 2)})
      for (const auto& h : hs)
        for (unsigned n = 1; n <= 3; ++n) {
          const JacobiParams jp(a, b);
          const BigReal ratio = exp(perturbed_logdet(n, jp, h, p).log_det - jacobi_logdet_exact(n, jp, p));
          worst = max(worst, relative_difference(ratio, heine_average_small_n(n, jp, h, p)));
        }
  o.detail << "worst relative difference " << sci(worst) << " at 40 digits (tolerance 1e-20)";
  o.require(worst <= tol, "tolerance");
}

void criterion_5(Outcome& o) {
  const JacobiParams jp(0, 0);
  struct Family {
    const char* name;
    PerturbationFn h;
    mpq_class limit;
  } families[] = {{"exp(x)", PerturbationFn::exp_linear(1), mpq_class(1, 8)},
                  {"exp(T2)", PerturbationFn::exp_t2(1), mpq_class(1, 4)}};
  for (const auto& f : families) {
    std::vector<BigReal> d;
    BigReal pv40;
    for (unsigned n : {10u, 20u, 40u}) {
      const Precision p(policy_digits(n));
      const BigReal direct = perturbed_logdet(n, jp, f.h, p).log_det;
      const AsymptoticPrediction ap = assemble_prediction(n, jp, f.h, p);
      d.push_back(abs(direct - ap.total()));
      const BigReal log_ratio = direct - jacobi_logdet_exact(n, jp, p);
      const BigReal mean = mean_term(cheb_expand_log(f.h, p), n, jp, MeanForm::limit, p);
      pv40 = log_ratio - mean;
    }
    o.detail << f.name << ": |d_n| " << sci(d[0]) << ", " << sci(d[1]) << ", " << sci(d[2]) << "; PV estimate at n=40 "
             << pv40.to_string(6) << " (limit " << f.limit.get_str() << "); ";
    o.require(d[1] < d[0] && d[2] < d[1], std::string(f.name) + " |d_n| decreasing");
    o.require(abs(pv40 - BigReal(f.limit, Precision(32))) <= pow10(-2, Precision(32)),
              std::string(f.name) + " PV estimate within 1e-2");
  }
}

void criterion_6(Outcome& o) {
  const Precision p(50);
  const unsigned n = 100;
  const BigReal n2(static_cast<long>(n * n), p), n3(static_cast<long>(n * n * n), p);

  const JacobiParams legendre(0, 0);
  const BigReal beta_dev = n2 * (fluid_recurrence(n, legendre, p).beta_tilde - BigReal(jacobi_beta_n(n, legendre), p));
  const BigReal beta_target(mpq_class(-1, 16), p);
  const BigReal beta_rel = abs(beta_dev / beta_target - 1L);

  const JacobiParams one_zero(1, 0);
  const BigReal alpha_dev =
      n3 * (fluid_recurrence(n, one_zero, p).alpha_tilde - BigReal(jacobi_alpha_n(n, one_zero), p));
  const BigReal alpha_target(mpq_class(-1, 4), p);
  const BigReal alpha_rel = abs(alpha_dev / alpha_target - 1L);

  const JacobiParams one_two(1, 2);
  const SupportInterval si = support_endpoints(n, one_two, p);
  const BigReal lower = n2 * (si.a + 1L), upper = n2 * (1L - si.b);
  const BigReal lower_rel = abs(lower / BigReal(2L, p) - 1L);
  const BigReal upper_rel = abs(upper / BigReal(0.5, p) - 1L);

  o.detail << "n^2(beta~-beta) " << beta_dev.to_string(6) << " (" << sci(beta_rel) << " rel); n^3(alpha~-alpha) "
           << alpha_dev.to_string(6) << " (" << sci(alpha_rel) << " rel); n^2(1+a) " << lower.to_string(6) << " ("
           << sci(lower_rel) << " rel); n^2(1-b) " << upper.to_string(6) << " (" << sci(upper_rel) << " rel)";
  o.require(beta_rel <= BigReal(0.01, p), "beta~ within 1%");
  o.require(alpha_rel <= BigReal(0.02, p), "alpha~ within 2%");
  o.require(lower_rel <= BigReal(0.05, p), "1+a within 5%");
  o.require(upper_rel <= BigReal(0.05, p), "1-b within 5%");
}

void criterion_7(Outcome& o) {
  const Precision p(40);
  const JacobiParams jp(mpq_class(1, 2), 1);
  BigReal worst(p);
  for (unsigned n : {1u, 5u, 20u}) {
    const BigReal target(static_cast<long>(n), p);
    worst = max(worst, abs(density_mass(support_endpoints(n, jp, p), p) / target - 1L));
  }
  o.detail << "worst relative deviation of the mass from n " << sci(worst) << " (tolerance 1e-10)";
  o.require(worst <= pow10(-10, p), "tolerance");
}

void criterion_8(Outcome& o) {
  std::mt19937 rng(8);
  const auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  // Gauss-Jacobi exactness through degree 2m-1.
  BigReal quad_worst(Precision(50));
  for (int trial = 0; trial < 8; ++trial) {
    const Precision p(50);
    const JacobiParams jp(mpq_class(pick(-3, 12), 4), mpq_class(pick(-3, 12), 4));
    const unsigned m = static_cast<unsigned>(pick(1, 30));
    const auto rule = gauss_jacobi_rule(m, jp, p);
    const auto mu = jacobi_moments(2 * m, jp, p);
    for (unsigned k = 0; k < 2 * m; ++k) {
      BigReal s(p);
      for (unsigned i = 0; i < m; ++i) s += rule.weights[i] * pow(rule.nodes[i], static_cast<long>(k));
      quad_worst = max(quad_worst, abs(s - mu[k]) / mu[0]);
    }
  }
  o.require(quad_worst <= pow10(-45, Precision(50)), "quadrature exactness");

  // Chebyshev round trip: expand, evaluate, expand the evaluation again.
  BigReal cheb_worst(Precision(50));
  for (int trial = 0; trial < 5; ++trial) {
    const Precision p(50);
    const BigReal t(mpq_class(pick(-20, 20), 10), p);
    const RealFunction f = [t](const BigReal& x) { return exp(t * x) / (x + 3L); };
    const auto ce = cheb_expand_auto(f, p);
    for (int j = 0; j < 20; ++j) {
      const BigReal x(mpq_class(pick(-1000, 1000), 1000), p);
      cheb_worst = max(cheb_worst, abs(cheb_eval(ce, x) - f(x)));
    }
    const auto again = cheb_expand([&ce](const BigReal& x) { return cheb_eval(ce, x); }, ce.degree(), p);
    for (std::size_t k = 0; k < ce.coeffs.size(); ++k)
      cheb_worst = max(cheb_worst, abs(again.coeffs[k] - ce.coeffs[k]));
  }
  o.require(cheb_worst <= pow10(-24, Precision(50)), "Chebyshev round trip");

  // ln G(z+1) - ln G(z) = ln Gamma(z)
  BigReal g_worst(Precision(64));
  for (int trial = 0; trial < 20; ++trial) {
    const Precision p(64);
    const BigReal z(mpq_class(pick(1, 100000), pick(1, 1000)), p);
    g_worst = max(g_worst, relative_difference(log_barnes_g(z + 1L, p) - log_barnes_g(z, p), log_gamma(z, p)));
  }
  o.require(g_worst <= pow10(-55, Precision(64)), "Barnes G difference equation");

  // ldl against modified-moment recurrence on randomized cases.
  const PerturbationFn families[] = {PerturbationFn::exp_linear(mpq_class(pick(-20, 20), 10)),
                                     PerturbationFn::exp_t2(mpq_class(pick(-10, 10), 10)),
                                     PerturbationFn::one_plus_cx2(mpq_class(pick(1, 30), 10)),
                                     PerturbationFn::constant(mpq_class(pick(1, 9), 2))};
  unsigned agree = 0;
  BigReal method_worst_ratio(Precision(32));
  for (int trial = 0; trial < 20; ++trial) {
    const JacobiParams jp(mpq_class(pick(-3, 12), 4), mpq_class(pick(-3, 12), 4));
    const auto& h = families[pick(0, 3)];
    const unsigned n = static_cast<unsigned>(pick(1, 20));
    const Precision p(policy_digits(n));
    const BigReal a = perturbed_logdet(n, jp, h, p, HankelResult::Method::ldl).log_det;
    const BigReal b = perturbed_logdet(n, jp, h, p, HankelResult::Method::recurrence).log_det;
    const BigReal tol = cross_validation_tolerance(n, p);
    method_worst_ratio = max(method_worst_ratio, BigReal::rounded(abs(a - b) / tol, Precision(32)));
    if (abs(a - b) <= tol) ++agree;
  }
  o.require(agree == 20, "ldl vs recurrence");

  // Precision escalation: doubling the digits moves ln D_n by less than the bound.
  unsigned escalation_ok = 0;
  for (unsigned n : {10u, 30u}) {
    const JacobiParams jp(mpq_class(1, 2), 1);
    const auto h = PerturbationFn::exp_t2(mpq_class(1, 2));
    const Precision p(policy_digits(n));
    const auto lo = perturbed_logdet(n, jp, h, p);
    const auto hi = perturbed_logdet(n, jp, h, Precision(2 * p.digits()));
    if (abs(lo.log_det - hi.log_det) <= lo.error_bound) ++escalation_ok;
  }
  o.require(escalation_ok == 2, "precision escalation");

  o.detail << "quadrature " << sci(quad_worst) << "; Chebyshev " << sci(cheb_worst) << "; G difference equation "
           << sci(g_worst) << "; ldl/recurrence agree " << agree << "/20 (worst at " << sci(method_worst_ratio)
           << " of tolerance); escalation " << escalation_ok << "/2";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"exact-formula identity", criterion_1},       {"rational ground truth", criterion_2},
      {"pure-weight asymptotics", criterion_3},      {"Heine identity", criterion_4},
      {"perturbed asymptotics", criterion_5},        {"Coulomb-fluid expansions", criterion_6},
      {"density normalization", criterion_7},        {"property suites", criterion_8},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures += std::string(" [exception: ") + e.what() + "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, name, (o.detail.str() + o.failures).c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

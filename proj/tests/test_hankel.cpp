#include "hdet/errors.hpp"
#include "hdet/hankel.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace hdet;
using test::near;
using test::value;
using Method = HankelResult::Method;

TEST_SUITE("hankel") {

TEST_CASE("policy") {
  CHECK(policy_digits(1) == 64);
  CHECK(policy_digits(100) == 172);
  CHECK(working_precision(100, Precision(64)).digits() == 64 + 80 + 10);
  CHECK(default_quad_order(40) == 72);
}

TEST_CASE("LDL of pure moments reproduces the closed form") {
  for (const auto& jp : {JacobiParams(0, 0), JacobiParams(mpq_class(1, 2), mpq_class(-1, 3)),
                         JacobiParams(mpq_class(-9, 10), mpq_class(-7, 10)), JacobiParams(4, 1)}) {
    for (unsigned n : {1u, 2u, 9u, 30u}) {
      const Precision p(policy_digits(n));
      const auto ms = pure_moment_sequence(2 * n, jp, working_precision(n, p));
      const auto r = hankel_logdet_ldl(ms, n, p);
      const BigReal want = jacobi_logdet_exact(n, jp, p);
      INFO("alpha = ", jp.alpha().get_str(), " beta = ", jp.beta().get_str(), " n = ", n, ": ", test::show(r.log_det, want));
      CHECK(abs(r.log_det - want) <= max(r.error_bound, pow10(-60, p)));
      CHECK(r.min_pivot > 0);
    }
  }
}

TEST_CASE("recurrence from ordinary moments agrees with the closed form") {
  const JacobiParams jp(mpq_class(3, 2), 1);
  const Precision p(64);
  MomentSequence ms = pure_moment_sequence(40, jp, working_precision(20, p));
  ms.modified.clear();
  const auto r = hankel_logdet_recurrence(ms, 20, jp, p);
  CHECK(near(r.log_det, jacobi_logdet_exact(20, jp, p), -55));
}

TEST_CASE("too few digits for an ill-conditioned matrix is reported") {
  const JacobiParams jp(0, 0);
  const Precision p(32);
  const auto ms = pure_moment_sequence(160, jp, p);
  CHECK_THROWS_AS(hankel_logdet_ldl(ms, 80, p), PrecisionError);
}

TEST_CASE("perturbed determinants against mpmath") {
  const Precision p(64);
  const auto r = perturbed_logdet(5, JacobiParams(mpq_class(1, 2), 0), PerturbationFn::exp_linear(1), p);
  CHECK(near(r.log_det, value(oracle::kLogDet_half_0_exp_5, p), -38));
  const auto s = perturbed_logdet(4, JacobiParams(1, mpq_class(1, 2)), PerturbationFn::exp_t2(mpq_class(1, 4)), p);
  CHECK(near(s.log_det, value(oracle::kLogDet_1_half_expT2q_4, p), -38));
}

TEST_CASE("LDL and modified-moment recurrence agree") {
  const auto h = parse_h("exp(0.5*x)+x^2");
  for (const auto& jp : {JacobiParams(mpq_class(1, 2), 1), JacobiParams(mpq_class(-1, 2), mpq_class(-1, 2))}) {
    for (unsigned n : {3u, 25u, 60u}) {
      const Precision p(policy_digits(n));
      const auto a = perturbed_logdet(n, jp, h, p, Method::ldl);
      const auto b = perturbed_logdet(n, jp, h, p, Method::recurrence);
      INFO("n = ", n, ": ", test::show(a.log_det, b.log_det));
      CHECK(abs(a.log_det - b.log_det) <= cross_validation_tolerance(n, p));
    }
  }
}

TEST_CASE("exact rational determinant") {
  const auto h = PerturbationFn::one_plus_cx2(mpq_class(1, 2));
  const JacobiParams jp(1, 2);
  const Precision p(64);
  const auto r = hankel_logdet_rational(5, jp, h, p);
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == mpq_class("13257146368/21139932153965625"));
  CHECK(near(perturbed_logdet(5, jp, h, p).log_det, r.log_det, -60));
  CHECK(near(perturbed_logdet(12, jp, h, p, Method::rational).log_det, perturbed_logdet(12, jp, h, p).log_det, -58));
  CHECK_THROWS_AS(hankel_logdet_rational(3, JacobiParams(mpq_class(1, 2), 0), h, p), DomainError);
  CHECK_THROWS_AS(hankel_logdet_rational(3, jp, PerturbationFn::exp_linear(1), p), DomainError);
}

TEST_CASE("scaling and reflection") {
  const Precision p(64);
  const JacobiParams jp(mpq_class(1, 2), mpq_class(3, 2));
  const JacobiParams swapped(mpq_class(3, 2), mpq_class(1, 2));
  for (unsigned n : {4u, 15u}) {
    // D_n[c w] = c^n D_n[w]
    const BigReal scaled = perturbed_logdet(n, jp, PerturbationFn::constant(3), p).log_det;
    CHECK(near(scaled, jacobi_logdet_exact(n, jp, p) + log(BigReal(3L, p)) * static_cast<long>(n), -58));
    // x -> -x swaps the exponents and flips t in exp(t x)
    const BigReal left = perturbed_logdet(n, jp, PerturbationFn::exp_linear(mpq_class(7, 10)), p).log_det;
    const BigReal right = perturbed_logdet(n, swapped, PerturbationFn::exp_linear(mpq_class(-7, 10)), p).log_det;
    CHECK(near(left, right, -58));
  }
}

TEST_CASE("result is stable under more digits") {
  const auto h = parse_h("1/(1.5-x)");
  const JacobiParams jp(mpq_class(1, 3), 0);
  const unsigned n = 20;
  const auto lo = perturbed_logdet(n, jp, h, Precision(50), Method::ldl, 80);
  const auto hi = perturbed_logdet(n, jp, h, Precision(90), Method::ldl, 80);
  CHECK(abs(lo.log_det - hi.log_det) <= lo.error_bound + pow10(-48, Precision(50)));
}

TEST_CASE("Heine average equals the determinant ratio") {
  const Precision p(40);
  const JacobiParams jp(mpq_class(1, 2), mpq_class(1, 3));
  const auto h = parse_h("exp(x)*(2+x)");
  for (unsigned n = 1; n <= 3; ++n) {
    const BigReal avg = heine_average_small_n(n, jp, h, p);
    const BigReal ratio = exp(perturbed_logdet(n, jp, h, p).log_det - jacobi_logdet_exact(n, jp, p));
    INFO("n = ", n, ": ", test::show(avg, ratio));
    CHECK(near(avg, ratio, -36));
  }
  CHECK_THROWS_AS(heine_average_small_n(4, jp, h, p), DomainError);
}

TEST_CASE("argument checks") {
  const Precision p(40);
  const auto ms = pure_moment_sequence(4, JacobiParams(0, 0), p);
  CHECK_THROWS_AS(hankel_logdet_ldl(ms, 0, p), DomainError);
  CHECK_THROWS_AS(hankel_logdet_ldl(ms, 3, p), DomainError);
  CHECK(std::string(to_string(Method::recurrence)) == "recurrence");
}

}

#include <random>

#include "hdet/errors.hpp"
#include "hdet/specfun.hpp"
#include "oracle_values.hpp"
#include "support.hpp"

using namespace hdet;
using test::near;
using test::value;

TEST_SUITE("specfun") {

TEST_CASE("log_barnes_g at integers") {
  const Precision p(64);
  CHECK(abs(log_barnes_g(BigReal(1L, p), p)) < pow10(-62, p));
  CHECK(abs(log_barnes_g(BigReal(2L, p), p)) < pow10(-62, p));
  CHECK(abs(log_barnes_g(BigReal(3L, p), p)) < pow10(-62, p));
  // G(5) = 1! 2! 3! = 12
  CHECK(near(log_barnes_g(BigReal(5L, p), p), log(BigReal(12L, p)), -62));
}

TEST_CASE("log_barnes_g against mpmath") {
  const Precision p(64);
  const struct {
    mpq_class z;
    const char* expected;
  } cases[] = {
      {mpq_class(1, 2), oracle::kLogBarnesG_half},  {mpq_class(3, 2), oracle::kLogBarnesG_3_2},
      {mpq_class(1, 10), oracle::kLogBarnesG_0_1},  {mpq_class(21, 4), oracle::kLogBarnesG_5_25},
      {mpq_class(37, 3), oracle::kLogBarnesG_37_3}, {mpq_class(501, 2), oracle::kLogBarnesG_250_5},
  };
  for (const auto& c : cases) {
    const BigReal got = log_barnes_g(BigReal(c.z, p), p);
    const BigReal want = value(c.expected, p);
    INFO(c.z.get_str(), ": ", test::show(got, want));
    CHECK(near(got, want, -60));
  }
}

TEST_CASE("log_gamma against mpmath") {
  const Precision p(64);
  CHECK(near(log_gamma(BigReal(mpq_class(1, 3), p), p), value(oracle::kLogGamma_1_3, p), -62));
  CHECK(near(log_gamma(BigReal(mpq_class(777, 10), p), p), value(oracle::kLogGamma_77_7, p), -62));
}

TEST_CASE("difference equation ln G(z+1) - ln G(z) = ln Gamma(z)") {
  std::mt19937 rng(20061018);
  std::uniform_real_distribution<double> dist(0.01, 60.0);
  for (int digits : {40, 64, 120}) {
    const Precision p(digits);
    for (int i = 0; i < 12; ++i) {
      const BigReal z(dist(rng), p);
      const BigReal lhs = log_barnes_g(z + 1L, p) - log_barnes_g(z, p);
      const BigReal rhs = log_gamma(z, p);
      INFO("z = ", z.to_string(17), " digits = ", digits);
      CHECK(near(lhs, rhs, 8 - digits));
    }
  }
}

TEST_CASE("zeta'(-1) and ln K agree with mpmath") {
  for (int digits : {32, 64}) {
    const Precision p(digits);
    const BigReal want = value(oracle::kZetaPrimeMinusOne, p);
    CHECK(near(zeta_prime_minus_one(p), want, 2 - digits));
    CHECK(near(constant_K(p), want, 2 - digits));
  }
}

TEST_CASE("precision above the oracle's stays consistent") {
  const Precision p(200);
  CHECK(near(log_barnes_g(BigReal(mpq_class(21, 4), p), p), value(oracle::kLogBarnesG_5_25, p), -68));
}

TEST_CASE("large-argument form approaches ln G(n+a+1)") {
  const Precision p(40);
  const BigReal a(mpq_class(1, 2), p);
  BigReal previous(1L, p);
  for (long n : {5L, 10L, 20L, 40L, 80L}) {
    const BigReal gap = abs(log_barnes_g_asym(BigReal(n, p), a, p) - log_barnes_g(BigReal(n, p) + a + 1L, p));
    INFO("n = ", n, " gap = ", gap.to_string(5));
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(previous < pow10(-3, p));
}

TEST_CASE("nonpositive arguments are rejected") {
  const Precision p(32);
  CHECK_THROWS_AS(log_barnes_g(BigReal(0L, p), p), DomainError);
  CHECK_THROWS_AS(log_gamma(BigReal(-1.5, p), p), DomainError);
}

}

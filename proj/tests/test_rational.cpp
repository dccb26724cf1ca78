#include "hdet/rational.hpp"
#include "support.hpp"

using namespace hdet;

TEST_SUITE("rational") {

TEST_CASE("weight polynomial and moments") {
  // (1-x)(1+x)^2 = 1 + x - x^2 - x^3
  const auto w = exact::jacobi_weight_polynomial(1, 2);
  REQUIRE(w.size() == 4);
  CHECK(w[0] == 1);
  CHECK(w[1] == 1);
  CHECK(w[2] == -1);
  CHECK(w[3] == -1);
  const auto mu = exact::moments(w, 3);
  CHECK(mu[0] == mpq_class(4, 3));
  CHECK(mu[1] == mpq_class(4, 15));
  CHECK(exact::multiply({1, 1}, {1, -1}) == exact::Polynomial{1, 0, -1});
}

TEST_CASE("Legendre determinants") {
  const auto mu = exact::moments({mpq_class(1)}, 8);
  CHECK(exact::hankel_determinant(mu, 1) == 2);
  CHECK(exact::hankel_determinant(mu, 2) == mpq_class(4, 3));
  CHECK(exact::hankel_determinant(mu, 3) == mpq_class(32, 135));
}

TEST_CASE("Gram-Schmidt recovers the Jacobi recurrence") {
  const auto mu = exact::moments(exact::jacobi_weight_polynomial(0, 0), 12);
  std::vector<mpq_class> a, b;
  exact::gram_schmidt_recurrence(mu, 6, a, b);
  REQUIRE(a.size() == 6);
  CHECK(b[0] == 0);
  for (unsigned n = 1; n < 6; ++n) {
    CHECK(a[n] == 0);
    CHECK(b[n] == mpq_class(n * n, 4 * n * n - 1));
  }
}

TEST_CASE("determinant equals product of norms") {
  // D_n = mu_0 prod_{k<n} beta_k^{n-k}
  const auto w = exact::jacobi_weight_polynomial(2, 1, {mpq_class(1), mpq_class(0), mpq_class(1, 2)});
  const auto mu = exact::moments(w, 16);
  std::vector<mpq_class> a, b;
  exact::gram_schmidt_recurrence(mu, 8, a, b);
  for (unsigned n = 1; n <= 8; ++n) {
    mpq_class prod = 1, hk = mu[0];
    for (unsigned k = 0; k < n; ++k) {
      if (k > 0) hk *= b[k];
      prod *= hk;
    }
    CHECK(exact::hankel_determinant(mu, n) == prod);
  }
}

}

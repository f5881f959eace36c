#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>

#include "bergman/special.hpp"
#include "doctest.h"

using namespace bergman;

TEST_CASE("zeta closed forms") {
  CHECK(zeta_real(2.0) == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-15));
  CHECK(zeta_real(4.0) == doctest::Approx(std::pow(M_PI, 4) / 90).epsilon(1e-15));
  CHECK_THROWS_AS(zeta_real(1.0), std::domain_error);
  CHECK_THROWS_AS(zeta_real(0.5), std::domain_error);
}

TEST_CASE("zeta against boost on [1.01, 50]") {
  for (double s = 1.01; s <= 50.0; s *= 1.05) {
    const double ref = boost::math::zeta(s);
    CHECK(std::abs(zeta_real(s) - ref) / ref <= 1e-10);
  }
  auto e = zeta_euler_maclaurin(1.01);
  CHECK(e.remainder_bound < 1e-14 * e.value);
}

TEST_CASE("gamma and beta") {
  CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  double f = 1;
  for (int k = 1; k <= 20; ++k) {
    CHECK(gamma_real(k) == doctest::Approx(f).epsilon(1e-14));
    f *= k;
  }
  CHECK(beta_real(1.0, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(beta_real(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-14));
  for (double x = 0.1; x <= 50; x *= 1.3)
    for (double y = 0.1; y <= 50; y *= 1.7) {
      double ref = boost::math::beta(x, y);
      CHECK(std::abs(beta_real(x, y) - ref) / ref <= 1e-10);
      CHECK(std::abs(gamma_real(x) - boost::math::tgamma(x)) / boost::math::tgamma(x) <= 1e-10);
    }
  CHECK_THROWS_AS(gamma_real(0.0), std::domain_error);
  CHECK_THROWS_AS(beta_real(-1.0, 1.0), std::domain_error);
}

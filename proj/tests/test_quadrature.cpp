#include <cmath>
#include <numbers>

#include "bergman/arith.hpp"
#include "bergman/quadrature.hpp"
#include "doctest.h"

using namespace bergman;

TEST_CASE("gauss_legendre integrates polynomials") {
  auto g = gauss_legendre(10, 0.0, 1.0);
  for (int k = 0; k <= 19; ++k) {
    double s = 0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], k);
    CHECK(s == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
  }
}

TEST_CASE("gauss_jacobi moments") {
  // int_{-1}^{1} (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
  for (double a : {-0.5, 0.0, 0.7, 2.0})
    for (double b : {-0.3, 0.0, 1.0}) {
      auto g = gauss_jacobi(12, a, b);
      double s = 0;
      for (double w : g.weights) {
        CHECK(w > 0);
        s += w;
      }
      const double ref = std::pow(2.0, a + b + 1) * std::exp(std::lgamma(a + 1) + std::lgamma(b + 1) - std::lgamma(a + b + 2));
      CHECK(s == doctest::Approx(ref).epsilon(1e-13));
      for (double x : g.nodes) CHECK(std::abs(x) < 1.0);
    }
}

TEST_CASE("radial rule reproduces |w|^2k moments") {
  for (double alpha : {1.0, 1.2, 1.5, 2.0, 3.0, 4.0}) {
    auto rr = radial_rule(alpha, 8);
    double mass = 0;
    for (double w : rr.weight) mass += w;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-14));
    for (int k = 0; k <= 15; ++k) {
      double s = 0;
      for (std::size_t i = 0; i < rr.radius.size(); ++i) s += rr.weight[i] * std::pow(rr.radius[i], 2 * k);
      // ||w^k||^2 in A^2_alpha = 1 / c_alpha(k)
      CHECK(s == doctest::Approx(1.0 / binom_coeff(alpha, static_cast<std::uint64_t>(k))).epsilon(1e-12));
    }
  }
}

TEST_CASE("disc rule exactness and parallel determinism") {
  DiscQuadrature q(2.0, 6, 16);
  CHECK(q.radial_exactness() == 11);
  CHECK(q.angular_exactness() == 15);
  auto f = [](cplx w) { return std::norm(w * w + 0.5 * w + 1.0); };
  const double a = q.integrate(f);
  const double b = q.integrate(f);
  CHECK(a == b);
  // |w^2 + w/2 + 1|^2 -> 1/3 + 1/4 * 1/2 + 1
  CHECK(a == doctest::Approx(1.0 / 3 + 0.125 + 1).epsilon(1e-14));
}

TEST_CASE("one-dimensional integrators") {
  for (double eps : {0.01, 0.05, 0.5}) {
    auto r = integrate_interval([&](double s) { return std::pow(s + eps, -4); }, 0.0, 1.0, 1e-13);
    const double exact = (std::pow(eps, -3) - std::pow(1 + eps, -3)) / 3;
    CHECK(std::abs(r.value - exact) / exact <= 1e-9);
  }
  auto e = integrate_half_line([](double s) { return std::exp(-2 * s); }, 0.0);
  CHECK(e.value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("r-variable radial rule") {
  for (double alpha : {1.5, 2.0, 3.0}) {
    auto rr = radial_rule(alpha, 40, RadialVariable::r);
    double s = 0, s1 = 0;
    for (std::size_t i = 0; i < rr.radius.size(); ++i) {
      s += rr.weight[i];
      s1 += rr.weight[i] * rr.radius[i];
    }
    CHECK(s == doctest::Approx(1.0).epsilon(1e-13));
    // E|w| under dm_alpha = Gamma(3/2) Gamma(alpha) / Gamma(alpha + 1/2)
    CHECK(s1 == doctest::Approx(std::exp(std::lgamma(1.5) + std::lgamma(alpha) - std::lgamma(alpha + 0.5))).epsilon(1e-12));
  }
  DiscQuadrature q(3.0, 5, 8, RadialVariable::r);
  CHECK(q.radial_exactness() == 4);
}

#include <cmath>
#include <numbers>
#include <random>

#include "bergman/arith.hpp"
#include "bergman/disc.hpp"
#include "doctest.h"

using namespace bergman;

namespace {

double coefficient_norm_oracle(const DiscPolynomial& f, double alpha) {
  // independent route: sum |a_j|^2 / binom(j + alpha - 1, j) via lgamma
  double s = 0;
  for (int j = 0; j <= f.degree(); ++j)
    s += std::norm(f.coeff(j)) * std::exp(std::lgamma(j + 1.0) + std::lgamma(alpha) - std::lgamma(j + alpha));
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("coefficient norm") {
  CHECK(norm_a2alpha_coeff(DiscPolynomial::constant(1.0), 2.0) == 1.0);
  CHECK(norm_a2alpha_coeff(DiscPolynomial::monomial(1), 2.0) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(norm_a2alpha_coeff(DiscPolynomial::monomial(1, std::sqrt(2.0)), 2.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("quadrature norms") {
  auto phi = DiscPolynomial::monomial(1, std::sqrt(2.0));
  auto n1 = norm_quad(phi, {1.0, 2.0});
  CHECK(n1.value == doctest::Approx(2 * std::sqrt(2.0) / 3).epsilon(1e-12));
  auto c = DiscPolynomial::constant(cplx(3, 4));
  for (double p : {0.5, 1.0, 2.0, 3.0})
    for (double a : {1.0, 1.5, 2.0}) CHECK(norm_quad(c, {p, a}).value == doctest::Approx(5.0).epsilon(1e-13));
  DiscPolynomial f({1.0, 1.0});
  CHECK(std::abs(norm_quad(f, {2.0, 2.0}).value - norm_a2alpha_coeff(f, 2.0)) <= 1e-12);
  // too-coarse rule is flagged for even p
  DiscPolynomial g({1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
  auto bad = norm_quad(g, {4.0, 2.0}, DiscQuadrature(2.0, 2, 6));
  CHECK(bad.insufficient_order);
  CHECK_FALSE(norm_quad(g, {4.0, 2.0}, DiscQuadrature::for_degree(2.0, 5, 4.0)).insufficient_order);
}

TEST_CASE("property: p = 2 quadrature equals coefficient formula") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> deg(0, 30);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 60; ++i) {
    std::vector<cplx> a(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : a) v = {u(rng), u(rng)};
    DiscPolynomial f(a);
    for (double alpha : {1.0, 1.5, 2.0, 3.0, 4.0}) {
      const double ref = coefficient_norm_oracle(f, alpha);
      CHECK(std::abs(norm_quad(f, {2.0, alpha}).value - ref) <= 1e-10 * ref);
      CHECK(std::abs(norm_a2alpha_coeff(f, alpha) - ref) <= 1e-12 * ref);
    }
  }
}

TEST_CASE("dilation") {
  DiscPolynomial f({1.0, 1.0, 1.0});
  CHECK(dilate(f, 1.0) == f);
  CHECK(dilate(f, 0.0) == DiscPolynomial::constant(1.0));
  CHECK(dilate(f, 0.5) == DiscPolynomial({1.0, 0.5, 0.25}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto g = random_disc_polynomial(rng, 15);
    // 0.5 and 0.25 are exact binary fractions so composition is exact
    CHECK(dilate(dilate(g, 0.5), 0.25) == dilate(g, 0.125));
  }
}

TEST_CASE("weissler") {
  auto c = DiscPolynomial::constant(2.0);
  CHECK(std::abs(weissler_gap(c, 1.0, 3.0, 2.0, 0.9).gap) < 1e-12);
  // witnesses 1 + 0.1 w at r = sqrt(p/q) + 0.05 (frozen from a high-precision 2-D integration)
  struct W {
    double p, q, alpha, gap;
  };
  for (auto w : {W{2, 4, 2, 3.5965e-4}, W{1, 2, 2, 1.8148e-4}, W{2, 4, 1, 7.0398e-4}}) {
    auto g = weissler_gap(DiscPolynomial({1.0, 0.1}), w.p, w.q, w.alpha, std::sqrt(w.p / w.q) + 0.05);
    CHECK(g.gap > 0);
    CHECK(g.gap == doctest::Approx(w.gap).epsilon(2e-4));
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    auto f = random_disc_polynomial(rng, 10);
    auto g = weissler_gap(f, 2, 4, 2, std::sqrt(0.5));
    CHECK(g.gap <= 10 * g.error + 1e-12);
  }
}

TEST_CASE("carleman and extremizer") {
  CHECK(alpha0() == doctest::Approx(1.2807764064044151).epsilon(1e-15));
  CHECK(std::abs(carleman_gap(DiscPolynomial::constant(1.5), 1.0, 2.0).gap) < 1e-12);
  auto e0 = extremizer(0.0, 2.0, 2.0, 1.0, 10);
  CHECK(e0 == DiscPolynomial::constant(2.0));
  auto e = extremizer(0.5, 1.0, 2.0, 2.0, 5);
  for (int j = 0; j <= 5; ++j) CHECK(e.coeff(j).real() == doctest::Approx((j + 1) / std::pow(2.0, j)));
  // truncation error against the closed-form norm at p = 2
  const cplx xi(0.3, 0.2);
  for (int D : {5, 10, 20}) {
    auto t = extremizer(xi, 1.0, 2.0, 2.0, D);
    const double full = extremizer_norm(xi, 1.0, 2.0, 2.0);
    const double trunc = norm_a2alpha_coeff(t, 2.0);
    CHECK(full * full - trunc * trunc == doctest::Approx(extremizer_tail_sq(xi, 1.0, 2.0, 2.0, D, 2.0)).epsilon(1e-9));
  }
  for (cplx x : {cplx(0.0), cplx(0.3), std::polar(0.6, std::numbers::pi / 4)}) {
    auto f = extremizer(x, 1.0, 2.0, 1.0, 60);
    auto g = carleman_gap(f, 1.0, 2.0);
    CHECK(std::abs(g.gap) <= 1e-4);
    CHECK(g.rhs == doctest::Approx(extremizer_norm(x, 1.0, 2.0, 1.0)).epsilon(1e-6));
  }
}

TEST_CASE("carlen identity") {
  for (double p : {0.5, 1.0, 2.0})
    for (double beta : {0.75, 1.0, 2.0}) {
      auto r = carlen_identity_residual(DiscPolynomial::constant(1.0), p, beta);
      CHECK(r.lhs == doctest::Approx(beta / (2 * (2 * beta - 1))).epsilon(1e-12));
      CHECK(r.residual < 1e-12);
    }
  CHECK(carlen_identity_residual(DiscPolynomial({2.0, 1.0}), 2.0, 2.0).residual <= 1e-8);
  CHECK(carlen_identity_residual(DiscPolynomial({3.0, 1.0, 1.0}), 1.0, 1.0).residual <= 1e-6);
  CHECK_THROWS_AS(carlen_identity_residual(DiscPolynomial({0.5, 1.0}), 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(carlen_identity_residual(DiscPolynomial({1.0, 1.0}), 1.0, 1.0), std::domain_error);
}

TEST_CASE("pointwise bound") {
  CHECK(std::abs(pointwise_bound_gap(DiscPolynomial::constant(2.0), 1.0, 2.0, 0.0).gap) < 1e-12);
  const cplx xi(0.4, 0.1);
  double prev = 1e9;
  for (int D : {10, 20, 40, 80}) {
    auto g = pointwise_bound_gap(extremizer(xi, 1.0, 2.0, 2.0, D), 2.0, 2.0, xi);
    CHECK(g.gap >= -1e-12);
    CHECK(g.gap <= prev + 1e-14);
    prev = g.gap;
  }
  CHECK(prev < 1e-8);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int i = 0; i < 40; ++i) {
    auto f = random_disc_polynomial(rng, 8);
    auto g = pointwise_bound_gap(f, 1.0, 2.0, {u(rng), u(rng)});
    CHECK(g.gap >= -10 * g.error - 1e-12);
  }
}

TEST_CASE("sphere slices") {
  auto one = sphere_slice_residual({1.0}, 3, 1000, 1);
  CHECK(one.residual < 1e-15);
  auto s3 = sphere_slice_residual({0.0, 1.0}, 3, 200000, 5);
  CHECK(s3.disc_exact == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s3.sphere_exact == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s3.residual <= 5 * s3.standard_error);
  // |w|^4 on the circle (n = 1) is identically 1
  auto s1 = sphere_slice_residual({0.0, 0.0, 1.0}, 1, 1000, 9);
  CHECK(s1.disc_exact == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s1.residual < 1e-12);
  // |w|^4 for n = 3 (alpha = 2) averages to 1/3
  auto s34 = sphere_slice_residual({0.0, 0.0, 1.0}, 3, 200000, 9);
  CHECK(s34.disc_exact == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(s34.residual <= 5 * s34.standard_error);
}

TEST_CASE("property: chain, HLin bound and the A^4_{2a} embedding") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 40; ++i) {
    auto f = random_disc_polynomial(rng, 12);
    double prev = 0;
    double prev_err = 0;
    for (int n = 1; n <= 4; ++n) {
      auto r = norm_quad(f, {double(n), double(n)});
      if (n > 1) CHECK(r.value <= prev + 10 * (r.error + prev_err) + 1e-12);
      prev = r.value;
      prev_err = r.error;
    }
    for (int n = 0; n <= 2; ++n) {
      const double p = 2 / (1 + n / 2.0);
      auto r = norm_quad(f, {p, 2.0});
      CHECK(norm_a2alpha_coeff(f, n + 2.0) <= r.value + 10 * r.error + 1e-12);
    }
    for (double a : {1.0, 2.0}) CHECK(norm_quad(f, {4.0, 2 * a}).value <= norm_a2alpha_coeff(f, a) * (1 + 1e-12));
  }
}

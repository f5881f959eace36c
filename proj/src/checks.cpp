// The check registry behind the verification suites. Each check exercises one
// operation on a finite truncation and reports the statistic it thresholds.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string_view>

#include "bergman/arith.hpp"
#include "bergman/carleson.hpp"
#include "bergman/disc.hpp"
#include "bergman/hankel.hpp"
#include "bergman/polydisc.hpp"
#include "bergman/report.hpp"
#include "bergman/series.hpp"
#include "bergman/special.hpp"

namespace bergman {

namespace {

using std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

// Each check draws from its own stream so results do not depend on which
// other checks ran before it.
std::mt19937_64 rng_for(const SuiteConfig& c, std::string_view id) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : id) h = (h ^ ch) * 1099511628211ull;
  return std::mt19937_64(c.seed ^ h);
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// residual <= tol
CheckOutcome bounded(double residual, double tol) {
  CheckOutcome o;
  o.gap = residual;
  o.tolerance = tol;
  o.ok = residual <= tol;
  return o;
}

PolydiscQuadOptions poly_opts(const SuiteConfig& c) {
  PolydiscQuadOptions o;
  o.radial_nodes = static_cast<int>(c.quad_order);
  return o;
}

std::size_t dirichlet_dim(const SuiteConfig& c) { return std::min<std::size_t>(c.prime_count, kMaxQuadDimension); }

DiscPolynomial random_symbol(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<cplx> a(static_cast<std::size_t>(degree) + 1);
  for (auto& x : a) x = {u(rng), u(rng)};
  return DiscPolynomial(a);
}

PolydiscPolynomial random_two_var(std::mt19937_64& rng, int deg) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::map<MultiIndex, cplx> c;
  for (std::uint32_t j = 0; j <= static_cast<std::uint32_t>(deg); ++j)
    for (std::uint32_t k = 0; j + k <= static_cast<std::uint32_t>(deg); ++k) c[MultiIndex({j, k})] = {u(rng), u(rng)};
  return PolydiscPolynomial(c);
}

PolydiscPolynomial random_four_var(std::mt19937_64& rng, int deg) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::map<MultiIndex, cplx> c;
  for (int t = 0; t < 6; ++t) {
    std::vector<std::uint32_t> e(4);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(deg + 1));
    c[MultiIndex(e)] = {u(rng), u(rng)};
  }
  return PolydiscPolynomial(c);
}

// ---------------------------------------------------------------- kernel

CheckOutcome check_primes(const SuiteConfig& c) {
  const auto table = primes_first(std::max<std::size_t>(c.prime_count, 25));
  double mismatches = table[24] == 97 ? 0 : 1;
  std::size_t j = 0;
  for (std::uint64_t n = 2; n <= table.largest(); ++n) {
    const bool listed = j < table.size() && table[j] == n;
    if (listed) ++j;
    if (listed != is_prime(n)) ++mismatches;
  }
  auto o = bounded(mismatches, 0);
  o.value("p_25", static_cast<double>(table[24]));
  o.value("table_size", static_cast<double>(table.size()));
  o.value("largest", static_cast<double>(table.largest()));
  return o;
}

CheckOutcome check_factorize(const SuiteConfig& c) {
  double bad = 0;
  for (std::uint64_t n = 1; n <= c.max_n; ++n)
    if (index_to_integer(factorize(n)) != n) ++bad;
  if (index_to_integer(factorize(360)) != 360 || factorize(12) != MultiIndex({2, 1})) ++bad;
  auto o = bounded(bad, 0);
  o.value("range", static_cast<double>(c.max_n));
  return o;
}

CheckOutcome check_binom(const SuiteConfig& c) {
  double worst = 0;
  for (double a : {1.0, 1.5, 2.0, 3.0, 4.0})
    for (std::uint64_t j = 0; j <= 60; ++j) {
      const double jd = static_cast<double>(j);
      const double oracle = std::exp(std::lgamma(jd + a) - std::lgamma(a) - std::lgamma(jd + 1));
      worst = std::max(worst, std::abs(binom_coeff(a, j) - oracle) / oracle);
    }
  double exact_bad = 0;
  for (std::uint64_t j = 0; j <= 40; ++j)
    if (binom_coeff(Rational(2), j) != Rational(static_cast<std::int64_t>(j + 1))) ++exact_bad;
  auto o = bounded(worst, c.tolerance);
  o.ok = o.ok && exact_bad == 0;
  o.value("max_relative_error", worst);
  o.value("c_2_mismatches", exact_bad);
  return o;
}

CheckOutcome check_divisor(const SuiteConfig& c) {
  const auto& tab = arithmetic_tables(c.max_n);
  double worst = 0;
  const std::uint64_t M = std::min<std::uint64_t>(1000, c.max_n);
  for (double a : {1.0, 1.5, 2.0, 3.0, 4.0})
    for (std::uint64_t m = 1; m <= M; m += 7)
      for (std::uint64_t n = 1; n <= M; n += 11) {
        if (std::gcd(m, n) != 1) continue;
        const double prod = divisor_fn(a, m) * divisor_fn(a, n);
        worst = std::max(worst, std::abs(divisor_fn(a, m * n) - prod) / prod);
      }
  double dom = 0, omega = 0, table = 0;
  for (std::uint64_t n = 1; n <= c.max_n; ++n) {
    const auto d = tab.d2(n);
    if (tab.d4(n) > d * d * d) ++dom;
    if ((tab.big_omega(n) == tab.small_omega(n)) != (tab.moebius(n) != 0)) ++omega;
    if (n <= 2000 && tab.d4(n) != static_cast<std::uint64_t>(divisor_fn(4.0, n))) ++table;
  }
  auto o = bounded(worst, c.tolerance);
  o.ok = o.ok && dom == 0 && omega == 0 && table == 0;
  o.value("multiplicativity_relative_error", worst);
  o.value("d4_exceeds_d_cubed", dom);
  o.value("omega_mu_inconsistent", omega);
  o.value("table_mismatches", table);
  o.value("d_4_of_30", divisor_fn(4.0, std::uint64_t{30}));
  return o;
}

CheckOutcome check_convolution(const SuiteConfig& c) {
  const std::uint64_t L = std::min<std::uint64_t>(c.max_n, 10000);
  double exact_bad = 0;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      auto r = convolution_residual(Rational(a), Rational(b), L, 200);
      if (r.multiplicative != Rational(0) || r.additive != Rational(0)) ++exact_bad;
    }
  auto real = convolution_residual(1.5, 2.5, std::min<std::uint64_t>(L, 2000));
  const double rr = std::max(real.multiplicative_relative, real.additive_relative);
  auto o = bounded(rr, 1e-9);
  o.ok = o.ok && exact_bad == 0;
  o.value("limit", static_cast<double>(L));
  o.value("integer_pairs_with_nonzero_residual", exact_bad);
  o.value("real_pair_relative_residual", rr);
  return o;
}

CheckOutcome check_special(const SuiteConfig& c) {
  double worst = 0;
  worst = std::max(worst, rel(zeta_real(2), pi * pi / 6));
  worst = std::max(worst, rel(zeta_real(4), std::pow(pi, 4) / 90));
  worst = std::max(worst, rel(gamma_real(0.5), std::sqrt(pi)));
  worst = std::max(worst, rel(gamma_real(5), 24));
  worst = std::max(worst, rel(beta_real(0.5, 0.5), pi));
  worst = std::max(worst, rel(beta_real(2, 3), 1.0 / 12));
  auto o = bounded(worst, c.tolerance);
  o.value("zeta_2", zeta_real(2));
  o.value("max_relative_error", worst);
  return o;
}

CheckOutcome check_avgord(const SuiteConfig& c) {
  const std::uint64_t x1 = std::max<std::uint64_t>(c.max_n, 100000);
  const std::uint64_t x2 = 10 * x1;
  auto a = average_order_ratio(1.5, x1);
  auto b = average_order_ratio(1.5, x2);
  CheckOutcome o;
  o.gap = std::abs(1 - b.ratio);
  o.tolerance = 0.3;
  o.ok = o.gap <= o.tolerance && std::abs(1 - b.ratio) < std::abs(1 - a.ratio);
  o.value("x1", static_cast<double>(x1));
  o.value("ratio_x1", a.ratio);
  o.value("x2", static_cast<double>(x2));
  o.value("ratio_x2", b.ratio);
  o.value("constant", a.constant);
  return o;
}

CheckOutcome check_squarefree(const SuiteConfig& c) {
  auto r = squarefree_zeta_residual(2.0, c.max_n);
  auto o = bounded(r.residual, r.tail_bound);
  o.value("partial", r.partial);
  o.value("target", r.target);
  return o;
}

// ---------------------------------------------------------------- disc

CheckOutcome check_coeff_norm(const SuiteConfig& c) {
  double worst = 0;
  worst = std::max(worst, rel(norm_a2alpha_coeff(DiscPolynomial::monomial(1, kSqrt2), 2.0), 1.0));
  worst = std::max(worst, rel(norm_a2alpha_coeff(DiscPolynomial::monomial(1), 3.0), 1 / std::sqrt(3.0)));
  worst = std::max(worst, rel(norm_a2alpha_coeff(DiscPolynomial::constant({3, 4}), 1.5), 5.0));
  auto rng = rng_for(c, "norm_a2alpha_coeff");
  for (int i = 0; i < 40; ++i) {
    auto f = random_disc_polynomial(rng, static_cast<int>(c.max_degree));
    for (double a : {1.0, 1.5, 2.0, 3.0, 4.0}) {
      double s = 0;
      for (int j = 0; j <= f.degree(); ++j)
        s += std::norm(f.coeff(j)) * std::exp(std::lgamma(j + 1.0) + std::lgamma(a) - std::lgamma(j + a));
      worst = std::max(worst, rel(norm_a2alpha_coeff(f, a), std::sqrt(s)));
    }
  }
  auto o = bounded(worst, c.tolerance);
  o.value("max_relative_error", worst);
  return o;
}

CheckOutcome check_norm_quad(const SuiteConfig& c) {
  auto rng = rng_for(c, "norm_quad");
  double worst = 0;
  for (int i = 0; i < 40; ++i) {
    auto f = random_disc_polynomial(rng, static_cast<int>(c.max_degree));
    for (double a : {1.0, 1.5, 2.0, 3.0, 4.0}) {
      const double ref = norm_a2alpha_coeff(f, a);
      if (ref > 0) worst = std::max(worst, std::abs(norm_quad(f, {2.0, a}).value - ref) / ref);
    }
  }
  const double a1 = norm_quad(DiscPolynomial::monomial(1, kSqrt2), {1.0, 2.0}).value;
  auto o = bounded(worst, c.tolerance);
  o.value("max_relative_error_p2", worst);
  o.value("a1_norm_sqrt2_w", a1);
  return o;
}

CheckOutcome check_a4_embedding(const SuiteConfig& c) {
  auto rng = rng_for(c, "norm_quad.a4_embedding");
  double worst = -INFINITY;
  for (int i = 0; i < 40; ++i) {
    auto f = random_disc_polynomial(rng, static_cast<int>(c.max_degree));
    for (double a : {1.0, 2.0}) {
      const double rhs = norm_a2alpha_coeff(f, a);
      if (rhs > 0) worst = std::max(worst, (norm_quad(f, {4.0, 2 * a}).value - rhs) / rhs);
    }
  }
  auto o = bounded(worst, c.tolerance);
  o.value("max_relative_gap", worst);
  return o;
}

CheckOutcome check_dilate(const SuiteConfig& c) {
  auto rng = rng_for(c, "dilate");
  double bad = 0;
  for (int i = 0; i < 50; ++i) {
    auto f = random_disc_polynomial(rng, static_cast<int>(c.max_degree));
    if (!(dilate(dilate(f, 0.5), 0.25) == dilate(f, 0.125))) ++bad;
    if (!(dilate(f, 1.0) == f)) ++bad;
  }
  auto o = bounded(bad, 0);
  o.value("mismatches", bad);
  return o;
}

struct Triple {
  double p, q, alpha;
};

CheckOutcome check_weissler(const SuiteConfig& c) {
  auto rng = rng_for(c, "weissler_gap");
  CheckOutcome o;
  o.tolerance = c.tolerance;
  o.gap = -INFINITY;
  for (auto t : {Triple{2, 4, 2}, Triple{1, 2, 2}, Triple{2, 4, 1}}) {
    const double r = std::sqrt(t.p / t.q);
    double worst = -INFINITY;
    for (int i = 0; i < 20; ++i) {
      auto g = weissler_gap(random_disc_polynomial(rng, static_cast<int>(c.max_degree)), t.p, t.q, t.alpha, r);
      worst = std::max(worst, g.gap - 10 * g.error);
    }
    o.gap = std::max(o.gap, worst);
    auto w = weissler_gap(DiscPolynomial({1.0, 0.1}), t.p, t.q, t.alpha, r + 0.05);
    o.ok = o.ok && w.gap > 10 * w.error;
    const std::string tag = "p" + std::to_string(int(t.p)) + "_q" + std::to_string(int(t.q)) + "_a" +
                            std::to_string(int(t.alpha));
    o.value("max_gap_at_threshold_" + tag, worst);
    o.value("witness_gap_" + tag, w.gap);
  }
  o.ok = o.ok && o.gap <= o.tolerance;
  return o;
}

CheckOutcome check_weissler_general(const SuiteConfig& c) {
  auto rng = rng_for(c, "weissler_gap.general_alpha");
  CheckOutcome o;
  o.gap = -INFINITY;
  o.tolerance = c.tolerance;
  for (double a : {1.25, 2.75}) {
    double worst = -INFINITY;
    for (int i = 0; i < 15; ++i) {
      auto g = weissler_gap(random_disc_polynomial(rng, static_cast<int>(c.max_degree)), 2, 4, a, std::sqrt(0.5));
      worst = std::max(worst, g.gap);
    }
    o.gap = std::max(o.gap, worst);
    o.value("max_gap_alpha_" + std::to_string(a).substr(0, 4), worst);
  }
  return o;
}

CheckOutcome check_carleman(const SuiteConfig& c) {
  auto rng = rng_for(c, "carleman_gap");
  CheckOutcome o;
  o.gap = -INFINITY;
  o.tolerance = c.tolerance;
  for (auto [p, a] : {std::pair{1.0, 1.0}, {2.0, 2.0}, {1.0, 2.0}}) {
    double worst = -INFINITY;
    for (int i = 0; i < 60; ++i) {
      auto g = carleman_gap(random_disc_polynomial(rng, static_cast<int>(c.max_degree)), p, a);
      worst = std::max(worst, g.gap - 10 * g.error);
    }
    o.gap = std::max(o.gap, worst);
    o.value("max_gap_p" + std::to_string(int(p)) + "_a" + std::to_string(int(a)), worst);
  }
  const double a0 = alpha0();
  const double a0_res = std::abs(a0 - (1 + std::sqrt(17.0)) / 4);
  o.value("alpha0", a0);
  o.ok = o.gap <= o.tolerance && a0_res <= 1e-15;
  return o;
}

CheckOutcome check_chain(const SuiteConfig& c) {
  auto rng = rng_for(c, "carleman_gap.chain");
  double worst = -INFINITY;
  for (int i = 0; i < 60; ++i) {
    auto f = random_disc_polynomial(rng, static_cast<int>(c.max_degree));
    NormResult prev{};
    for (int n = 1; n <= 4; ++n) {
      auto r = norm_quad(f, {double(n), double(n)});
      if (n > 1) worst = std::max(worst, r.value - prev.value - 10 * (r.error + prev.error));
      prev = r;
    }
  }
  auto o = bounded(worst, c.tolerance);
  o.value("max_increase", worst);
  return o;
}

CheckOutcome check_hlin(const SuiteConfig& c) {
  auto rng = rng_for(c, "carleman_gap.hlin");
  double worst = -INFINITY;
  for (int i = 0; i < 60; ++i) {
    auto f = random_disc_polynomial(rng, static_cast<int>(c.max_degree));
    for (int n = 0; n <= 2; ++n) {
      auto r = norm_quad(f, {2 / (1 + n / 2.0), 2.0});
      worst = std::max(worst, norm_a2alpha_coeff(f, n + 2.0) - r.value - 10 * r.error);
    }
  }
  auto o = bounded(worst, c.tolerance);
  o.value("max_gap", worst);
  return o;
}

CheckOutcome check_carleman_open(const SuiteConfig& c) {
  auto rng = rng_for(c, "carleman_gap.below_alpha0");
  CheckOutcome o;
  o.gap = -INFINITY;
  o.tolerance = c.tolerance;
  for (double p : {1.0, 2.0}) {
    double worst = -INFINITY;
    for (int i = 0; i < 20; ++i) {
      auto g = carleman_gap(random_disc_polynomial(rng, static_cast<int>(c.max_degree)), p, 1.1);
      worst = std::max(worst, g.gap);
    }
    o.gap = std::max(o.gap, worst);
    o.value("max_gap_alpha_1.1_p" + std::to_string(int(p)), worst);
  }
  return o;
}

CheckOutcome check_extremizer(const SuiteConfig&) {
  CheckOutcome o;
  o.tolerance = 1e-4;
  int k = 0;
  for (cplx x : {cplx(0.0), cplx(0.3), std::polar(0.6, pi / 4)}) {
    auto g = carleman_gap(extremizer(x, 1.0, 2.0, 1.0, 60), 1.0, 2.0);
    o.gap = std::max(o.gap, std::abs(g.gap));
    o.value("abs_gap_xi" + std::to_string(k++), std::abs(g.gap));
  }
  o.ok = o.gap <= o.tolerance;
  return o;
}

CheckOutcome check_carlen(const SuiteConfig&) {
  double worst = 0;
  for (double p : {0.5, 1.0, 2.0})
    for (double beta : {0.75, 1.0, 2.0})
      worst = std::max(worst, carlen_identity_residual(DiscPolynomial::constant(1.0), p, beta).residual);
  const double a = carlen_identity_residual(DiscPolynomial({2.0, 1.0}), 2.0, 2.0).residual;
  const double b = carlen_identity_residual(DiscPolynomial({3.0, 1.0, 1.0}), 1.0, 1.0).residual;
  worst = std::max({worst, a, b});
  auto o = bounded(worst, 1e-6);
  o.value("residual_2_plus_w", a);
  o.value("residual_3_plus_w_plus_w2", b);
  return o;
}

CheckOutcome check_pointwise(const SuiteConfig& c) {
  auto rng = rng_for(c, "pointwise_bound_gap");
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  double worst = -INFINITY;
  for (int i = 0; i < 40; ++i) {
    auto f = random_disc_polynomial(rng, static_cast<int>(c.max_degree));
    auto g = pointwise_bound_gap(f, 1.0, 2.0, {u(rng), u(rng)});
    worst = std::max(worst, -g.gap - 10 * g.error);
  }
  const cplx xi(0.4, 0.1);
  const double kernel_gap = pointwise_bound_gap(extremizer(xi, 1.0, 2.0, 2.0, 80), 2.0, 2.0, xi).gap;
  auto o = bounded(worst, c.tolerance);
  o.ok = o.ok && kernel_gap >= -1e-12 && kernel_gap < 1e-8;
  o.value("max_violation", worst);
  o.value("kernel_gap_degree_80", kernel_gap);
  return o;
}

CheckOutcome check_slices(const SuiteConfig& c) {
  auto a = sphere_slice_residual({0.0, 1.0}, 3, 200000, c.seed);
  auto b = sphere_slice_residual({0.0, 0.0, 1.0}, 1, 1000, c.seed + 1);
  auto d = sphere_slice_residual({0.0, 0.0, 1.0}, 3, 200000, c.seed + 2);
  CheckOutcome o;
  o.gap = std::max(a.residual / a.standard_error, d.residual / d.standard_error);
  o.tolerance = 5;  // standard errors
  o.ok = o.gap <= o.tolerance && b.residual < 1e-12 && rel(a.disc_exact, 0.5) < 1e-14;
  o.value("mean_abs_w2_n3", a.sphere_mean);
  o.value("exact_abs_w2_n3", a.disc_exact);
  o.value("residual_abs_w4_n1", b.residual);
  o.value("mean_abs_w4_n3", d.sphere_mean);
  o.value("exact_abs_w4_n3", d.disc_exact);
  return o;
}

// ---------------------------------------------------------------- polydisc

CheckOutcome check_bohr(const SuiteConfig& c) {
  double bad = 0;
  if (bohr_lift(DirichletPolynomial::term(2)) != PolydiscPolynomial({{MultiIndex({1}), 1.0}})) ++bad;
  if (bohr_lift(DirichletPolynomial::term(6)) != PolydiscPolynomial({{MultiIndex({1, 1}), 1.0}})) ++bad;
  const std::uint64_t N = std::min<std::uint64_t>(c.max_n, 100000);
  auto rng = rng_for(c, "bohr_lift");
  std::uniform_real_distribution<double> u(-1, 1);
  std::map<std::uint64_t, cplx> a;
  for (std::uint64_t n = 1; n <= N; ++n) a[n] = {u(rng), u(rng)};
  DirichletPolynomial f(a);
  if (bohr_unlift(bohr_lift(f)) != f) ++bad;
  // multiplicativity on a product that stays inside the table
  std::map<std::uint64_t, cplx> g1, g2;
  for (std::uint64_t n = 1; n <= 30; ++n) {
    g1[n] = {u(rng), u(rng)};
    g2[n] = {u(rng), u(rng)};
  }
  const DirichletPolynomial f1(g1), f2(g2);
  const auto lhs = bohr_lift(f1 * f2);
  const auto rhs = bohr_lift(f1) * bohr_lift(f2);
  double mult = 0;
  for (const auto& [k, v] : lhs.coeffs()) mult = std::max(mult, std::abs(v - rhs.coeff(k)));
  auto o = bounded(mult, 1e-12);
  o.ok = o.ok && bad == 0;
  o.value("round_trip_range", static_cast<double>(N));
  o.value("mismatches", bad);
  o.value("product_residual", mult);
  return o;
}

CheckOutcome check_norm_a2alpha(const SuiteConfig& c) {
  double worst = rel(norm_a2alpha(DirichletPolynomial::term(6), 2.0), 0.5);
  const std::uint64_t N = std::min<std::uint64_t>(c.max_n, 10000);
  const auto& tab = arithmetic_tables(N);
  std::map<std::uint64_t, cplx> a;
  double s = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    a[n] = 1.0;
    s += 1.0 / static_cast<double>(tab.d4(n));
  }
  const double v = norm_a2alpha(DirichletPolynomial(a), 4.0);
  worst = std::max(worst, rel(v, std::sqrt(s)));
  auto o = bounded(worst, c.tolerance);
  o.value("norm_6_alpha2", norm_a2alpha(DirichletPolynomial::term(6), 2.0));
  o.value("norm_sum_alpha4", v);
  return o;
}

CheckOutcome check_polydisc_quad(const SuiteConfig& c) {
  auto rng = rng_for(c, "polydisc_norm_quad");
  double worst = 0;
  for (std::size_t d = 1; d <= dirichlet_dim(c); ++d)
    for (double a : {1.0, 2.0, 3.0})
      for (int t = 0; t < 4; ++t) {
        auto F = bohr_lift(random_dirichlet_polynomial(rng, 60, d));
        const double ref = norm_a2alpha(F, a);
        worst = std::max(worst, std::abs(polydisc_norm_quad(F, 2.0, a).value - ref) / ref);
      }
  auto o = bounded(worst, c.tolerance);
  o.value("max_relative_error_p2", worst);
  o.value("dimension", static_cast<double>(dirichlet_dim(c)));
  return o;
}

CheckOutcome check_translate(const SuiteConfig& c) {
  auto rng = rng_for(c, "translate");
  std::uniform_real_distribution<double> u(-1, 1);
  std::map<std::uint64_t, cplx> a;
  const std::uint64_t N = std::min<std::uint64_t>(c.max_n, 1000);
  for (std::uint64_t n = 1; n <= N; ++n) a[n] = {u(rng), u(rng)};
  DirichletPolynomial g(a);
  const double eps = 0.37;
  auto primes = PrimeTable::up_to(N);
  std::vector<double> r;
  for (auto p : primes.primes()) r.push_back(std::pow(static_cast<double>(p), -eps));
  auto via = bohr_unlift(dilate(bohr_lift(g), r));
  auto direct = translate(g, eps);
  double worst = 0;
  for (const auto& [n, v] : direct.coeffs()) worst = std::max(worst, std::abs(v - via.coeff(n)) / std::abs(v));
  auto twice = translate(translate(g, 0.2), 0.3);
  auto once = translate(g, 0.5);
  double semi = 0;
  for (const auto& [n, v] : once.coeffs()) semi = std::max(semi, std::abs(v - twice.coeff(n)) / std::abs(v));
  auto o = bounded(std::max(worst, semi), 1e-14);
  o.value("lift_relative_residual", worst);
  o.value("semigroup_relative_residual", semi);
  return o;
}

CheckOutcome check_weisslerhalf(const SuiteConfig& c) {
  auto rng = rng_for(c, "weisslerhalf_gap");
  const auto opt = poly_opts(c);
  CheckOutcome o;
  o.gap = -INFINITY;
  o.tolerance = c.tolerance;
  for (auto [p, q] : {std::pair{2.0, 4.0}, {1.0, 2.0}}) {
    const double eps = -std::log2(std::sqrt(p / q));
    double worst = -INFINITY;
    for (int t = 0; t < 4; ++t) {
      auto g = weisslerhalf_gap(random_dirichlet_polynomial(rng, 12, std::min<std::size_t>(2, dirichlet_dim(c))),
                                p, q, eps, opt);
      worst = std::max(worst, g.gap - 10 * g.error);
    }
    o.gap = std::max(o.gap, worst);
    const double r = std::sqrt(p / q) + 0.05;
    auto w = weisslerhalf_gap(DirichletPolynomial::constant(1.0) + DirichletPolynomial::term(2, 0.3), p, q,
                              -std::log2(r), opt);
    o.ok = o.ok && w.gap > 10 * w.error;
    const std::string tag = "p" + std::to_string(int(p)) + "_q" + std::to_string(int(q));
    o.value("max_gap_at_threshold_" + tag, worst);
    o.value("witness_gap_" + tag, w.gap);
  }
  o.ok = o.ok && o.gap <= o.tolerance;
  return o;
}

CheckOutcome check_helson(const SuiteConfig& c) {
  auto rng = rng_for(c, "helson_gap");
  double worst = -INFINITY;
  for (int t = 0; t < 6; ++t) {
    auto g = helson_gap(random_dirichlet_polynomial(rng, 18, std::min<std::size_t>(2, dirichlet_dim(c))), poly_opts(c));
    worst = std::max(worst, -g.gap - 10 * g.error);
  }
  auto one = helson_gap(DirichletPolynomial::constant(1.0) + DirichletPolynomial::term(2), poly_opts(c));
  auto o = bounded(worst, c.tolerance);
  o.value("max_violation", worst);
  o.value("lhs_1_plus_2s", one.lhs);
  o.value("rhs_1_plus_2s", one.rhs);
  return o;
}

CheckOutcome check_ahl(const SuiteConfig& c) {
  auto rng = rng_for(c, "ahl_gap");
  double worst = -INFINITY;
  for (int t = 0; t < 3; ++t) {
    auto h = random_dirichlet_polynomial(rng, 12, std::min<std::size_t>(2, dirichlet_dim(c)));
    for (double p : {0.5, 1.0, 1.5}) {
      auto a = ahl_gap(h, p, poly_opts(c));
      worst = std::max({worst, -a.direct.gap - 10 * a.direct.error, -a.dilation_path.gap - 10 * a.dilation_path.error});
    }
  }
  auto w = ahl_gap(DirichletPolynomial::constant(1.0) + DirichletPolynomial::term(2) + DirichletPolynomial::term(4),
                   1.0, poly_opts(c));
  auto o = bounded(worst, c.tolerance);
  o.ok = o.ok && divisor_fn(4.0, std::uint64_t{30}) == 64.0;
  o.value("max_violation", worst);
  o.value("direct_gap_1_2_4", w.direct.gap);
  o.value("dilation_gap_1_2_4", w.dilation_path.gap);
  return o;
}

CheckOutcome check_dirichlet_pointwise(const SuiteConfig& c) {
  auto rng = rng_for(c, "dirichlet_pointwise_gap");
  double worst = -INFINITY;
  for (int t = 0; t < 6; ++t) {
    auto f = random_dirichlet_polynomial(rng, 20, dirichlet_dim(c));
    for (double sigma : {0.75, 1.0, 2.0}) {
      auto g = dirichlet_pointwise_gap(f, 2.0, sigma, poly_opts(c));
      worst = std::max(worst, -g.gap - 10 * g.error);
    }
  }
  double prev = INFINITY;
  bool shrinking = true;
  for (std::uint64_t N : {1u, 4u, 12u, 40u, 150u}) {
    auto gk = dirichlet_pointwise_gap(truncated_kernel(1.0, N, 3), 2.0, 1.0, poly_opts(c));
    const double r = gk.gap / gk.rhs;
    shrinking = shrinking && r > 0 && r < prev;
    prev = r;
  }
  auto o = bounded(worst, c.tolerance);
  o.ok = o.ok && shrinking;
  o.value("max_violation", worst);
  o.value("kernel_relative_gap_150", prev);
  return o;
}

// ---------------------------------------------------------------- hankel

CheckOutcome check_weakfac(const SuiteConfig& c) {
  auto w = weakfac_constants();
  double worst = std::abs(w.phi_a1 - 2 * kSqrt2 / 3);
  worst = std::max(worst, std::abs(w.hankel_norm - 1));
  worst = std::max(worst, std::abs(w.c1_bound - 3 / (2 * kSqrt2)));
  worst = std::max(worst, std::abs(w.c1_closed - std::sqrt(9.0 / 8)));
  worst = std::max(worst, std::abs(w.cd_bound[3] - 81.0 / 64));
  auto o = bounded(worst, c.tolerance);
  o.value("phi_a1", w.phi_a1);
  o.value("phi_a2", w.phi_a2);
  o.value("hankel_norm", w.hankel_norm);
  o.value("c1_bound", w.c1_bound);
  o.value("c4_bound", w.cd_bound[3]);
  return o;
}

CheckOutcome check_weakfac_matrix(const SuiteConfig& c) {
  const int D = static_cast<int>(c.max_degree);
  auto M = build_disc_bergman_hankel(DiscPolynomial::monomial(1, kSqrt2), D);
  auto s = singular_values(M);
  double off_block = 0;
  for (std::size_t i = 0; i < M.rows; ++i)
    for (std::size_t j = 0; j < M.cols; ++j)
      if (i + j != 1) off_block = std::max(off_block, std::abs(M(i, j)));
  const double s1 = s.values.at(0), s2 = s.values.at(1);
  const double tail = s.values.size() > 2 ? s.values[2] : 0.0;
  auto o = bounded(std::max({std::abs(M(0, 1) - 1.0), std::abs(M(1, 0) - 1.0), std::abs(s1 - 1), std::abs(s2 - 1),
                             off_block, tail}),
                   c.tolerance);
  o.value("entry_0_1", M(0, 1).real());
  o.value("entry_1_0", M(1, 0).real());
  o.value("s_1", s1);
  o.value("s_2", s2);
  o.value("basis_size", static_cast<double>(M.rows));
  return o;
}

CheckOutcome check_bergman_builder(const SuiteConfig& c) {
  const std::uint64_t nb = std::min<std::uint64_t>(10ull * c.max_degree, 60);
  auto sym = hilbert_type_symbol(nb * nb);
  auto par = build_bergman_hankel(sym, nb, Exec::parallel);
  auto ser = build_bergman_hankel(sym, nb, Exec::serial);
  const double differ = par.entries == ser.entries ? 0 : 1;
  auto s = singular_values(par);
  const double frob = rel(s.sum_sq(), par.frobenius_sq());
  // principal submatrix never exceeds the full section, index by index
  auto sub = build_bergman_hankel(sym, nb / 2, Exec::parallel);
  auto ss = singular_values(sub);
  double mono = 0;
  for (std::size_t i = 0; i < ss.values.size(); ++i) mono = std::max(mono, ss.values[i] - s.values[i]);
  auto o = bounded(std::max(frob, mono), c.tolerance);
  o.ok = o.ok && differ == 0;
  o.value("basis", static_cast<double>(nb));
  o.value("serial_parallel_differ", differ);
  o.value("frobenius_relative_residual", frob);
  o.value("restriction_excess", mono);
  o.value("s_1", s.values[0]);
  return o;
}

CheckOutcome check_hardy_builder(const SuiteConfig& c) {
  auto rng = rng_for(c, "build_hardy_hankel");
  std::uniform_int_distribution<int> u(-5, 5);
  const std::uint64_t L = 60;
  HankelSymbol sym;
  sym.n_sym = L * L;
  double mass = 0;
  const auto& tab = arithmetic_tables(L);
  for (std::uint64_t l = 1; l <= L; ++l) {
    const int a = u(rng), b = u(rng);
    if (a == 0 && b == 0) continue;
    sym.rho[l] = cplx(a, b);
    mass += (a * a + b * b) * static_cast<double>(tab.d2(l));
  }
  auto M = build_hardy_hankel(sym, L);
  const double r = rel(frobenius_sq_upto(M, L), mass);
  auto o = bounded(r, c.tolerance);
  o.value("mass_upto_L", frobenius_sq_upto(M, L));
  o.value("divisor_mass", mass);
  o.value("hs_norm_hardy_sq", std::pow(hs_norm_hardy(sym), 2));
  return o;
}

CheckOutcome check_singular_values(const SuiteConfig& c) {
  auto rng = rng_for(c, "singular_values");
  std::uniform_real_distribution<double> u(-1, 1);
  double worst = 0;
  for (int t = 0; t < 5; ++t) {
    HankelMatrix M;
    M.rows = M.cols = 12;
    for (std::size_t i = 0; i < 144; ++i) M.entries.emplace_back(u(rng), u(rng));
    auto a = singular_values(M);
    auto b = singular_values_gram(M);
    for (std::size_t i = 0; i < a.values.size(); ++i)
      worst = std::max(worst, std::abs(a.values[i] - b.values[i]) / a.values[0]);
    worst = std::max(worst, rel(a.sum_sq(), M.frobenius_sq()));
  }
  HankelMatrix swap;
  swap.rows = swap.cols = 2;
  swap.entries = {0.0, 1.0, 1.0, 0.0};
  auto s = singular_values(swap);
  worst = std::max({worst, std::abs(s.values[0] - 1), std::abs(s.values[1] - 1)});
  auto o = bounded(worst, std::max(c.tolerance, 1e-10));
  o.value("max_route_difference", worst);
  return o;
}

CheckOutcome check_hs(const SuiteConfig& c) {
  double bad = 0;
  const std::vector<std::uint64_t> set = {2, 15, 1001, 17ull * 19 * 23 * 29, 31ull * 37 * 41 * 43 * 47};
  for (std::size_t j = 1; j <= set.size(); ++j) {
    std::map<std::uint64_t, Rational> one{{set[j - 1], Rational(1)}};
    if (hs_mass_bergman_exact(one) != Rational(1)) ++bad;
    if (hs_mass_hardy_exact(one) != Rational(std::int64_t{1} << j)) ++bad;
  }
  auto rng = rng_for(c, "hs_norm_bergman");
  std::uniform_int_distribution<int> u(-5, 5);
  const std::uint64_t L = 200;
  std::map<std::uint64_t, Rational> rho_sq;
  HankelSymbol sym;
  sym.n_sym = L * L;
  for (std::uint64_t l = 1; l <= L; ++l) {
    const int a = u(rng), b = u(rng);
    if (a == 0 && b == 0) continue;
    sym.rho[l] = cplx(a, b);
    rho_sq[l] = Rational(a * a + b * b);
  }
  const Rational exact = hs_mass_bergman_exact(rho_sq);
  if (bergman_section_mass_exact(rho_sq, L, L) != exact) ++bad;
  const double fl = rel(std::pow(hs_norm_bergman(sym), 2), exact.to_double());
  auto o = bounded(fl, c.tolerance);
  o.ok = o.ok && bad == 0 && hs_norm_bergman(sym) <= hs_norm_hardy(sym);
  o.value("exact_mismatches", bad);
  o.value("mass_L200", exact.to_double());
  o.value("float_relative_residual", fl);
  o.value("hardy_mass_set_j5", hs_mass_hardy_exact({{set[4], Rational(1)}}).to_double());
  return o;
}

CheckOutcome check_hilbert_symbol(const SuiteConfig&) {
  auto h = hilbert_type_symbol(100);
  auto ps = hilbert_type_hs_partial_sums({100, 1000, 10000, 100000});
  bool growing = true;
  for (std::size_t i = 1; i < ps.mass.size(); ++i) growing = growing && ps.mass[i] > ps.mass[i - 1];
  CheckOutcome o;
  o.gap = std::abs(h(1));
  o.tolerance = 0;
  o.ok = o.gap == 0 && growing;
  for (std::size_t i = 0; i < ps.N.size(); ++i) o.value("hs_mass_" + std::to_string(ps.N[i]), ps.mass[i]);
  return o;
}

CheckOutcome check_hilbert_form(const SuiteConfig& c) {
  const auto f2 = DirichletPolynomial::term(2);
  const auto f3 = DirichletPolynomial::term(3);
  auto a = hilbert_form_eval(f2, f2);
  auto b = hilbert_form_eval(f2, f3);
  const double ca = 1 / (2 * std::pow(std::log(4.0), 2));
  const double cb = 1 / (std::sqrt(6.0) * std::pow(std::log(6.0), 2));
  const double ra = std::abs(a.value - ca), rb = std::abs(b.value - cb);
  auto o = bounded(std::max(ra - a.error, rb - b.error), c.tolerance);
  o.value("H_2_2", a.value.real());
  o.value("H_2_3", b.value.real());
  o.value("coefficient_route_2_3", hilbert_form_coeff(f2, f3).real());
  return o;
}

CheckOutcome check_witness(const SuiteConfig&) {
  CheckOutcome o;
  double lo = INFINITY;
  for (double eps : {0.1, 0.05, 0.025}) {
    auto w = noncompactness_witness(eps);
    lo = std::min(lo, w.value);
    o.value("witness_eps_" + std::to_string(eps).substr(0, 5), w.value);
  }
  o.value("min", lo);
  o.gap = -lo;
  o.tolerance = 0;
  o.ok = lo > 0;
  return o;
}

CheckOutcome check_extend(const SuiteConfig& c) {
  auto rng = rng_for(c, "extend_E");
  double worst = 0;
  for (int t = 0; t < 10; ++t) {
    auto g = random_symbol(rng, 30);
    auto h = random_symbol(rng, 30);
    const cplx rhs = bergman_inner(g, h);
    worst = std::max(worst, std::abs(hardy_inner(extend_E(g), extend_E(h)) - rhs) / (1 + std::abs(rhs)));
  }
  auto Ew = extend_E(DiscPolynomial::monomial(1));
  const bool multiplicative = Ew * Ew == extend_E(DiscPolynomial::monomial(2));
  auto o = bounded(worst, std::max(c.tolerance, 1e-14));
  o.ok = o.ok && !multiplicative;
  o.value("isometry_relative_residual", worst);
  o.value("E_w_squared_equals_E_w2", multiplicative ? 1 : 0);
  return o;
}

CheckOutcome check_diagonal(const SuiteConfig& c) {
  auto rng = rng_for(c, "diagonal_D");
  double worst = -INFINITY;
  for (int t = 0; t < 20; ++t) {
    auto F = random_two_var(rng, static_cast<int>(c.max_degree));
    auto DF = diagonal_D(F);
    worst = std::max(worst, std::real(bergman_inner(DF, DF)) - std::real(hardy_inner(F, F)));
  }
  auto o = bounded(worst, c.tolerance);
  o.value("max_gap_sq", worst);
  return o;
}

CheckOutcome check_diagonal_hp(const SuiteConfig& c) {
  auto rng = rng_for(c, "diagonal_D.hp_contraction");
  CheckOutcome o;
  o.gap = -INFINITY;
  o.tolerance = c.tolerance;
  const int deg = std::min(4, static_cast<int>(c.max_degree));
  for (double p : {3.0, 4.0}) {
    double worst = -INFINITY;
    for (int t = 0; t < 8; ++t) {
      auto F = random_two_var(rng, deg);
      const double lhs = norm_quad(diagonal_D(F), {p, 2.0}).value;
      const double rhs = std::pow(torus_pnorm_p(F, p).value, 1 / p);
      worst = std::max(worst, lhs - rhs);
    }
    o.gap = std::max(o.gap, worst);
    o.value("max_gap_p" + std::to_string(int(p)), worst);
  }
  return o;
}

CheckOutcome check_project(const SuiteConfig& c) {
  auto rng = rng_for(c, "project_P");
  double worst = 0;
  for (int t = 0; t < 10; ++t) {
    auto F = random_two_var(rng, static_cast<int>(c.max_degree));
    auto G = random_two_var(rng, static_cast<int>(c.max_degree));
    auto PF = project_P(F);
    auto PPF = project_P(PF);
    for (const auto& [k, a] : PF.coeffs()) worst = std::max(worst, std::abs(a - PPF.coeff(k)));
    std::map<MultiIndex, cplx> diff;
    for (const auto& [k, a] : F.coeffs()) diff[k] = a - PF.coeff(k);
    worst = std::max(worst, std::abs(hardy_inner(PolydiscPolynomial(diff), project_P(G))));
  }
  auto o = bounded(worst, std::max(c.tolerance, 1e-12));
  o.value("max_residual", worst);
  return o;
}

CheckOutcome check_sv(const SuiteConfig& c) {
  auto rng = rng_for(c, "sv_preservation_residual");
  const int D = std::max(3, static_cast<int>(c.max_degree));
  double worst = 0, worst2 = 0;
  for (int t = 0; t < 5; ++t) {
    auto r = sv_preservation_residual(random_symbol(rng, 6), D);
    worst = std::max(worst, r.residual);
    worst2 = std::max(worst2, r.residual_2d);
  }
  auto g = sv_preservation_residual(DiscPolynomial::monomial(1, kSqrt2), 1);
  const double golden = std::max({std::abs(g.bidisc_values.at(0) - 1), std::abs(g.bidisc_values.at(1) - 1),
                                  std::abs(g.bidisc_values.at(2))});
  auto o = bounded(std::max({worst, worst2, golden}), std::max(c.tolerance, 1e-12));
  o.value("D", D);
  o.value("residual_D", worst);
  o.value("residual_2D", worst2);
  o.value("sqrt2_w_bidisc_s1", g.bidisc_values[0]);
  o.value("sqrt2_w_bidisc_s2", g.bidisc_values[1]);
  return o;
}

CheckOutcome check_sv_rate(const SuiteConfig& c) {
  // symbol with slowly decaying coefficients filling degree 2D
  const int D = std::max(3, static_cast<int>(c.max_degree));
  std::vector<cplx> b(static_cast<std::size_t>(2 * D) + 1);
  for (std::size_t l = 0; l < b.size(); ++l) b[l] = 1 / std::sqrt(static_cast<double>(l) + 1);
  const DiscPolynomial phi(b);
  auto lo = singular_values(build_disc_bergman_hankel(phi, D));
  auto hi = singular_values(build_disc_bergman_hankel(phi, 2 * D));
  CheckOutcome o;
  o.gap = hi.values[0] - lo.values[0];
  o.tolerance = c.tolerance;
  o.value("s1_D", lo.values[0]);
  o.value("s1_2D", hi.values[0]);
  o.value("s2_D", lo.values[1]);
  o.value("s2_2D", hi.values[1]);
  return o;
}

CheckOutcome check_duality(const SuiteConfig& c) {
  const std::uint64_t N = std::max<std::uint64_t>(c.max_n, 100000);
  auto t = duality_tail(4.0 / 3, N);
  auto o = bounded(t.relative_change, 0.05);
  o.ok = o.ok && t.increment > 0;
  o.value("N", static_cast<double>(N));
  o.value("sum_N", t.sum_n);
  o.value("sum_2N", t.sum_2n);
  o.value("increment", t.increment);
  o.value("predicted_increment", t.predicted_increment);
  o.value("predicted_tail", t.tail_n);
  return o;
}

// ---------------------------------------------------------------- carleson

CheckOutcome check_poisson(const SuiteConfig& c) {
  const cplx w = {0.3, -0.4};
  const cplx ws[1] = {w};
  double worst = std::abs(poisson_extend(TrigPolynomial({{SignedIndex{1}, 1.0}}), ws) - w);
  worst = std::max(worst, std::abs(poisson_extend(TrigPolynomial({{SignedIndex{-1}, 1.0}}), ws) - std::conj(w)));
  auto rng = rng_for(c, "poisson_extend");
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int t = 0; t < 10; ++t) {
    auto F = random_four_var(rng, 3);
    std::map<SignedIndex, cplx> co;
    for (const auto& [k, a] : F.coeffs()) {
      SignedIndex s;
      for (auto e : k.exponents()) s.push_back(static_cast<std::int32_t>(e));
      co[s] = a;
    }
    const std::vector<cplx> pt = {{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    worst = std::max(worst, std::abs(poisson_extend(TrigPolynomial(co), pt) - F(pt)));
  }
  auto o = bounded(worst, std::max(c.tolerance, 1e-13));
  o.value("max_residual", worst);
  o.value("q_plus_example", static_cast<double>(q_plus({1, -2, 0, 1})));
  return o;
}

CheckOutcome check_dpnorm(const SuiteConfig&) {
  CheckOutcome o;
  o.tolerance = 1e-8;
  for (double p : {0.5, 1.0, 1.5}) {
    auto k = dpnorm_constants(p);
    o.gap = std::max({o.gap, std::abs(k.right - k.right_quad), std::abs(k.left - k.left_quad),
                      std::abs(k.right - k.right_half_beta)});
    o.ok = o.ok && k.not_contractive();
    const std::string tag = std::to_string(p).substr(0, 3);
    o.value("left_p" + tag, k.left);
    o.value("right_p" + tag, k.right);
  }
  o.ok = o.ok && o.gap <= o.tolerance;
  return o;
}

CheckOutcome check_dl2(const SuiteConfig& c) {
  auto w = dl2_witness();
  auto o = bounded(std::max(std::abs(w.closed - 43.0 / 36), std::abs(w.quad - w.closed)), std::max(c.tolerance, 1e-10));
  o.ok = o.ok && w.closed > w.input_norm * w.input_norm;
  o.value("closed", w.closed);
  o.value("quadrature", w.quad);
  o.value("input_norm_sq", w.input_norm * w.input_norm);
  return o;
}

CheckOutcome check_diagonal_measure(const SuiteConfig& c) {
  auto rng = rng_for(c, "diagonal_measure_gap");
  double worst = -INFINITY;
  for (double p : {2.0, 4.0})
    for (int t = 0; t < 8; ++t) {
      auto r = diagonal_measure_gap(random_four_var(rng, 2), p);
      worst = std::max(worst, r.gap / r.rhs);
    }
  auto half = diagonal_measure_gap(PolydiscPolynomial({{MultiIndex({1}), 0.5}, {MultiIndex({0, 1}), 0.5}}), 1.0);
  auto o = bounded(worst, std::max(c.tolerance, 1e-10));
  o.ok = o.ok && half.gap > 10 * half.error;
  o.value("max_relative_gap_even_p", worst);
  o.value("p1_half_sum_lhs", half.lhs);
  o.value("p1_half_sum_rhs", half.rhs);
  return o;
}

CheckOutcome check_diagonal_measure_q(const SuiteConfig& c) {
  auto rng = rng_for(c, "diagonal_measure_gap.hq_question");
  double worst = -INFINITY;
  for (int t = 0; t < 4; ++t) {
    auto r = diagonal_measure_gap(random_four_var(rng, 2), 3.0, poly_opts(c));
    worst = std::max(worst, r.gap / r.rhs);
  }
  CheckOutcome o;
  o.gap = worst;
  o.tolerance = c.tolerance;
  o.value("max_relative_gap_p3", worst);
  return o;
}

CheckOutcome check_carleson2(const SuiteConfig& c) {
  const std::size_t d = std::max<std::size_t>(c.prime_count, 1);
  const std::uint64_t N = std::max<std::uint64_t>(c.max_n, 1000);
  CheckOutcome o;
  o.gap = -INFINITY;
  o.tolerance = 0;
  double prev = carleson2_ratio(0.2, d, N).limit.ratio;
  o.value("ratio_0.2", prev);
  bool in_range = true, tail_ok = true;
  for (double eps : {0.1, 0.05}) {
    auto r = carleson2_ratio(eps, d, N);
    const double f = r.limit.ratio / prev;
    in_range = in_range && f >= 1.4 && f <= 2.8;
    const double gap = std::log(r.limit.l2mass / r.truncated.l2mass);
    tail_ok = tail_ok && gap >= 0 && gap <= r.l2mass_log_tail_bound;
    const std::string tag = std::to_string(eps).substr(0, 4);
    o.value("ratio_" + tag, r.limit.ratio);
    o.value("factor_" + tag, f);
    o.value("truncated_ratio_" + tag, r.truncated.ratio);
    o.gap = std::max(o.gap, std::max(1.4 - f, f - 2.8));
    prev = r.limit.ratio;
  }
  auto l2 = [](double e) {
    const double z = zeta_real(1 + 2 * e);
    return z * z / zeta_real(2 + 4 * e);
  };
  const double slope_far = std::log(l2(0.05) / l2(0.2)) / std::log(0.25);
  const double slope_near = std::log(l2(0.01) / l2(0.02)) / std::log(0.5);
  auto tw = two_omega_residual(2.0, std::max<std::uint64_t>(c.max_n, 1000));
  o.value("l2mass_slope_0.2_0.05", slope_far);
  o.value("l2mass_slope_0.02_0.01", slope_near);
  o.value("two_omega_partial", tw.partial);
  o.value("two_omega_target", tw.target);
  o.ok = in_range && tail_ok && slope_near >= -2.3 && slope_near <= -1.7 && tw.within_bound();
  return o;
}

CheckOutcome check_boundary_layer(const SuiteConfig&) {
  double worst = 0;
  for (double eps : {0.01, 0.02, 0.05, 0.2, 0.5}) {
    auto r = integrate_boundary_layer([eps](double s) { return std::pow(s + eps, -4); }, eps);
    const double exact = (std::pow(eps, -3) - std::pow(1 + eps, -3)) / 3;
    worst = std::max(worst, std::abs(r.value - exact) / exact);
  }
  auto o = bounded(worst, 1e-9);
  o.value("max_relative_error", worst);
  return o;
}

std::vector<CheckSpec> build_registry() {
  std::vector<CheckSpec> r = {
      // kernel
      {"primes_first", "kernel", "prime sequence p_j", "prime table agrees with primality testing", false,
       check_primes},
      {"factorize", "kernel", "unique factorization kappa(n)", "index_to_integer(factorize(n)) = n on the range",
       false, check_factorize},
      {"binom_coeff", "kernel", "Eq. binomseries", "c_alpha(j) against the Gamma-ratio formula", false, check_binom},
      {"divisor_fn", "kernel", "Eq. zetapow",
       "d_alpha multiplicative on coprime pairs; d_4 <= d^3; mu, omega, Omega consistent", false, check_divisor},
      {"convolution_residual", "kernel", "Eq. multconv",
       "additive and multiplicative convolution identities, exact for integer orders", false, check_convolution},
      {"zeta_real", "kernel", "special functions for Eq. avgord and Lemma Dpnorm", "zeta, Gamma, Beta closed forms",
       false, check_special},
      {"average_order_ratio", "kernel", "Eq. avgord", "average order of d(n) alpha^Omega(n) at alpha = 3/2", false,
       check_avgord},
      {"squarefree_zeta_residual", "kernel", "square-free zeta remark",
       "sum |mu(n)| n^-2 against zeta(2)/zeta(4) within the tail bound", false, check_squarefree},
      // disc
      {"norm_a2alpha_coeff", "disc", "Eq. A2anorm", "coefficient norm against an lgamma oracle", false,
       check_coeff_norm},
      {"norm_quad", "disc", "Bergman space norm", "p = 2 quadrature equals the coefficient norm", false,
       check_norm_quad},
      {"norm_quad.a4_embedding", "disc", "A^4_{2alpha} embedding remark", "||f||_{A^4_{2a}} <= ||f||_{A^2_a}", false,
       check_a4_embedding},
      {"dilate", "disc", "dilation P_r", "dilation semigroup exact on coefficients", false, check_dilate},
      {"weissler_gap", "disc", "Thm weissler", "contraction at r = sqrt(p/q), witness 1 + 0.1w beyond it", false,
       check_weissler},
      {"weissler_gap.general_alpha", "disc", "Thm weissler conjecture",
       "threshold gaps for alpha not of the form (n+1)/2", true, check_weissler_general},
      {"carleman_gap", "disc", "Thm generalcarleman", "Carleman gaps at (p, alpha) in {(1,1), (2,2), (1,2)}", false,
       check_carleman},
      {"carleman_gap.chain", "disc", "Cor. chain", "||f||_{A^n_n} nonincreasing in n = 1..4", false, check_chain},
      {"carleman_gap.hlin", "disc", "Cor. HLin", "coefficient bound for p = 2/(1 + n/2)", false, check_hlin},
      {"carleman_gap.below_alpha0", "disc", "Question after Thm generalcarleman",
       "empirical gaps at alpha = 1.1 below alpha_0", true, check_carleman_open},
      {"extremizer", "disc", "Thm generalcarleman equality case",
       "|Carleman gap| of the truncated extremal family at (alpha, p) = (2, 1)", false, check_extremizer},
      {"carlen_identity_residual", "disc", "Lemma carlenid", "integration-by-parts identity residual", false,
       check_carlen},
      {"pointwise_bound_gap", "disc", "Eq. pest", "pointwise estimate on random points; kernel near equality", false,
       check_pointwise},
      {"sphere_slice_residual", "disc", "Lemma slices", "sphere averages against disc integrals", false,
       check_slices},
      // polydisc
      {"bohr_lift", "polydisc", "Bohr lift z_j = p_j^-s", "coefficient bijection and multiplicativity", false,
       check_bohr},
      {"norm_a2alpha", "polydisc", "Eq. zetapow", "coefficient norms through d_alpha", false, check_norm_a2alpha},
      {"polydisc_norm_quad", "polydisc", "Eq. A2infnorm", "p = 2 tensor quadrature equals the coefficient norm",
       false, check_polydisc_quad},
      {"translate", "polydisc", "Thm weisslerhalf", "T_eps equals P_r with r_j = p_j^-eps; semigroup", false,
       check_translate},
      {"weisslerhalf_gap", "polydisc", "Thm weisslerhalf", "threshold 2^-eps = sqrt(p/q) and witness beyond it",
       false, check_weisslerhalf},
      {"helson_gap", "polydisc", "Lemma helson", "||f||_{A^1} >= (sum |a_n|^2 / d_4(n))^(1/2)", false, check_helson},
      {"ahl_gap", "polydisc", "Thm AHLineq", "square-free and dilation-path coefficient bounds", false, check_ahl},
      {"dirichlet_pointwise_gap", "polydisc", "Eq. Appointwise", "pointwise estimate; kernel family approaches it",
       false, check_dirichlet_pointwise},
      // hankel
      {"weakfac_constants", "hankel", "Thm weakfac", "||phi||_{A^1} = 2 sqrt2/3, ||H_phi|| = 1, C_d >= (9/8)^{d/2}",
       false, check_weakfac},
      {"weakfac_constants.matrix", "hankel", "Thm weakfac",
       "matrix of H_phi for phi = sqrt2 w is ((0,1),(1,0)) with singular values (1,1)", false, check_weakfac_matrix},
      {"build_bergman_hankel", "hankel", "Thm HSforms",
       "serial and parallel builders agree; Frobenius consistency; restriction monotonicity", false,
       check_bergman_builder},
      {"build_hardy_hankel", "hankel", "Eq. mhank", "Frobenius mass of the Hardy section equals sum |rho|^2 d", false,
       check_hardy_builder},
      {"singular_values", "hankel", "singular numbers s_n(H)", "LAPACK route against the Gram route", false,
       check_singular_values},
      {"hs_norm_bergman", "hankel", "Thm HSforms", "exact HS identity and the factors 2^j on the set N", false,
       check_hs},
      {"hilbert_type_symbol", "hankel", "Thm hilberttype", "rho_1 = 0 and growing Bergman HS partial sums", false,
       check_hilbert_symbol},
      {"hilbert_form_eval", "hankel", "Eq. hilberttype", "half-line integral against closed forms", false,
       check_hilbert_form},
      {"noncompactness_witness", "hankel", "Thm hilberttype", "H(k_eps^2) bounded below as eps decreases", false,
       check_witness},
      {"extend_E", "hankel", "E is an isometry", "<Ef, Eg> = <f, g>; E(w)^2 != E(w^2)", false, check_extend},
      {"diagonal_D", "hankel", "Lemma Dnorm", "D contracts H^2(D^2) into A^2(D)", false, check_diagonal},
      {"diagonal_D.hp_contraction", "hankel", "Lemma Dnorm question", "gaps of D from H^p(D^2) to A^p(D), p = 3, 4",
       true, check_diagonal_hp},
      {"project_P", "hankel", "P = ED averages coefficients", "P is an orthogonal projection", false, check_project},
      {"sv_preservation_residual", "hankel", "Lemma DEhankel", "spectra of H_phi and H_{E phi} agree", false,
       check_sv},
      {"sv_preservation_residual.truncation_rate", "hankel", "Lemma DEhankel truncation",
       "top singular values at D and 2D for a slowly decaying symbol", true, check_sv_rate},
      {"duality_tail", "hankel", "Thm duality", "tail sum at alpha = 4/3 changes by < 5% when N doubles", false,
       check_duality},
      // carleson
      {"poisson_extend", "carleson", "Poisson extension", "examples and evaluation of analytic polynomials", false,
       check_poisson},
      {"dpnorm_constants", "carleson", "Lemma Dpnorm", "2/(2+p) > 2/(p B(p/2, 1/2)) with quadrature cross-checks",
       false, check_dpnorm},
      {"dl2_witness", "carleson", "Lemma DL2norm", "||P f(z, z)||^2 = 43/36 > 1 = ||f||^2", false, check_dl2},
      {"diagonal_measure_gap", "carleson", "Thm carleson", "even p: gap <= 0; p = 1 counterexample", false,
       check_diagonal_measure},
      {"diagonal_measure_gap.hq_question", "carleson", "Question after Thm carleson",
       "relative diagonal gaps at p = 3", true, check_diagonal_measure_q},
      {"carleson2_ratio", "carleson", "Thm carleson2",
       "ratio roughly doubles per halving of eps; l2 mass slope; Euler tail bound", false, check_carleson2},
      {"carleson2_ratio.boundary_layer", "carleson", "Thm carleson2",
       "boundary-layer quadrature of (sigma + eps)^-4 against the closed form", false, check_boundary_layer},
  };
  std::sort(r.begin(), r.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i].id == r[i - 1].id) throw std::logic_error("duplicate check id " + r[i].id);
  return r;
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = build_registry();
  return registry;
}

}  // namespace bergman

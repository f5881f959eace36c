// Acceptance gate: runs criteria 1-9 at their stated sizes and tolerances and
// prints one PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bergman/arith.hpp"
#include "bergman/carleson.hpp"
#include "bergman/disc.hpp"
#include "bergman/hankel.hpp"
#include "bergman/polydisc.hpp"
#include "bergman/report.hpp"
#include "bergman/series.hpp"

using namespace bergman;

namespace {

using std::numbers::pi;

struct Result {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// ---- 1. golden constants, 1e-10 of closed form, < 1 s
Result golden() {
  Result r;
  double worst = 0;
  auto dev = [&](double a, double b) { worst = std::max(worst, std::abs(a - b)); };
  const auto w = dl2_witness();
  dev(w.closed, 43.0 / 36);
  dev(w.quad, 43.0 / 36);
  const auto k = weakfac_constants();
  dev(k.phi_a1, 2 * std::sqrt(2.0) / 3);
  dev(k.hankel_norm, 1.0);
  dev(k.c1_bound, 3 / (2 * std::sqrt(2.0)));
  dev(k.c1_bound, std::sqrt(9.0 / 8));
  for (double p : {0.5, 1.0, 1.5}) {
    const auto c = dpnorm_constants(p);
    dev(c.left_quad, 2 / (2 + p));
    dev(c.right_quad, 2 / (p * std::beta(p / 2, 0.5)));
    dev(c.left, 2 / (2 + p));
    dev(c.right, 2 / (p * std::beta(p / 2, 0.5)));
    r.pass = r.pass && c.left > c.right;
  }
  dev(alpha0(), (1 + std::sqrt(17.0)) / 4);
  r.pass = r.pass && worst <= 1e-10 && std::abs(alpha0() - 1.280776) < 5e-7;
  r.detail = "max deviation " + fmt("%.2e", worst) + ", alpha0 = " + fmt("%.9f", alpha0());
  return r;
}

// ---- 2. exact convolution identities and d_4 <= d^3, < 30 s
Result exact_arith() {
  Result r;
  int nonzero = 0;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      auto e = convolution_residual(Rational(a), Rational(b), 10000, 10000);
      if (e.multiplicative != Rational(0) || e.additive != Rational(0)) ++nonzero;
    }
  const auto& tab = arithmetic_tables(1000000);
  std::uint64_t bad = 0;
  for (std::uint64_t n = 1; n <= 1000000; ++n) {
    const auto d = tab.d2(n);
    if (tab.d4(n) > d * d * d) ++bad;
  }
  r.pass = nonzero == 0 && bad == 0;
  r.detail = std::to_string(nonzero) + " of 16 integer pairs with nonzero residual (l <= 1e4), " +
             std::to_string(bad) + " violations of d_4 <= d^3 (n <= 1e6)";
  return r;
}

// ---- 3. quadrature against coefficient norms at p = 2, < 60 s
Result oracle() {
  Result r;
  std::mt19937_64 rng(3003);
  std::uniform_int_distribution<int> deg(0, 30);
  std::uniform_real_distribution<double> u(-1, 1);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<cplx> a(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : a) v = {u(rng), u(rng)};
    const DiscPolynomial f(a);
    for (double alpha : {1.0, 1.5, 2.0, 3.0, 4.0}) {
      const double ref = norm_a2alpha_coeff(f, alpha);
      worst = std::max(worst, std::abs(norm_quad(f, {2.0, alpha}).value - ref) / ref);
    }
  }
  double worst_poly = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
    const auto F = bohr_lift(random_dirichlet_polynomial(rng, 60, d));
    for (double alpha : {1.0, 2.0, 3.0}) {
      const double ref = norm_a2alpha(F, alpha);
      worst_poly = std::max(worst_poly, std::abs(polydisc_norm_quad(F, 2.0, alpha).value - ref) / ref);
    }
  }
  r.pass = worst <= 1e-10 && worst_poly <= 1e-10;
  r.detail = "disc max relative " + fmt("%.2e", worst) + " (200 polynomials), polydisc " + fmt("%.2e", worst_poly) +
             " (50 polynomials, d <= 3)";
  return r;
}

// ---- 4. inequality suites, < 5 min
Result inequalities() {
  Result r;
  const double tol = 1e-10;
  std::mt19937_64 rng(4004);
  std::string d;

  double carleman = -INFINITY;
  for (auto [p, a] : {std::pair{1.0, 1.0}, {2.0, 2.0}, {1.0, 2.0}})
    for (int i = 0; i < 1000; ++i) {
      auto g = carleman_gap(random_disc_polynomial(rng, 15), p, a);
      carleman = std::max(carleman, g.gap - 10 * g.error);
    }
  r.pass = r.pass && carleman <= tol;
  d += "carleman " + fmt("%.2e", carleman);

  struct T {
    double p, q, a;
  };
  double weissler = -INFINITY, witness = INFINITY;
  for (auto t : {T{2, 4, 2}, T{1, 2, 2}, T{2, 4, 1}}) {
    const double rr = std::sqrt(t.p / t.q);
    for (int i = 0; i < 100; ++i) {
      auto g = weissler_gap(random_disc_polynomial(rng, 15), t.p, t.q, t.a, rr);
      weissler = std::max(weissler, g.gap - 10 * g.error);
    }
    auto w = weissler_gap(DiscPolynomial({1.0, 0.1}), t.p, t.q, t.a, rr + 0.05);
    witness = std::min(witness, w.gap - 10 * w.error);
  }
  r.pass = r.pass && weissler <= tol && witness > 0;
  d += ", weissler " + fmt("%.2e", weissler) + " / witness margin " + fmt("%.2e", witness);

  double chain = -INFINITY;
  for (int i = 0; i < 500; ++i) {
    auto f = random_disc_polynomial(rng, 15);
    NormResult prev{};
    for (int n = 1; n <= 4; ++n) {
      auto q = norm_quad(f, {double(n), double(n)});
      if (n > 1) chain = std::max(chain, q.value - prev.value - 10 * (q.error + prev.error));
      prev = q;
    }
  }
  r.pass = r.pass && chain <= tol;
  d += ", chain " + fmt("%.2e", chain);

  double helson = -INFINITY, ahl = -INFINITY;
  for (int i = 0; i < 26; ++i) {
    const std::size_t dim = i < 20 ? 2 : 3;
    auto g = helson_gap(random_dirichlet_polynomial(rng, dim == 2 ? 18 : 30, dim));
    helson = std::max(helson, -g.gap - 10 * g.error);
  }
  for (int i = 0; i < 13; ++i) {
    const std::size_t dim = i < 10 ? 2 : 3;
    auto f = random_dirichlet_polynomial(rng, dim == 2 ? 12 : 30, dim);
    for (double p : dim == 2 ? std::vector<double>{0.5, 1.0, 1.5, 2.0} : std::vector<double>{1.0, 2.0}) {
      auto a = ahl_gap(f, p);
      ahl = std::max({ahl, -a.direct.gap - 10 * a.direct.error, -a.dilation_path.gap - 10 * a.dilation_path.error});
    }
  }
  r.pass = r.pass && helson <= tol && ahl <= tol;
  d += ", helson " + fmt("%.2e", helson) + ", ahl " + fmt("%.2e", ahl);
  r.detail = "max violations: " + d;
  return r;
}

// ---- 5. extremal family at (alpha, p) = (2, 1), degree 60
Result sharpness() {
  Result r;
  double worst = 0;
  for (cplx xi : {cplx(0.0), cplx(0.3), std::polar(0.6, pi / 4)})
    worst = std::max(worst, std::abs(carleman_gap(extremizer(xi, 1.0, 2.0, 1.0, 60), 1.0, 2.0).gap));
  r.pass = worst <= 1e-4;
  r.detail = "max |carleman_gap| " + fmt("%.2e", worst);
  return r;
}

// ---- 6. spectral preservation and the isometry of E, < 2 min
Result spectral() {
  Result r;
  std::mt19937_64 rng(6006);
  std::uniform_int_distribution<int> deg(1, 6);
  std::uniform_real_distribution<double> u(-1, 1);
  double r30 = 0, r60 = 0;
  for (int i = 0; i < 20; ++i) {
    std::vector<cplx> a(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : a) v = {u(rng), u(rng)};
    auto s = sv_preservation_residual(DiscPolynomial(a), 30);
    r30 = std::max(r30, s.residual);
    r60 = std::max(r60, s.residual_2d);
  }
  // <Ef, Eg> = <f, g> in floating point, and exactly for integer coefficients
  double iso = 0;
  std::uniform_int_distribution<int> ci(-9, 9);
  bool exact = true;
  for (int t = 0; t < 20; ++t) {
    std::vector<cplx> fa(31), ga(31);
    for (auto& v : fa) v = {double(ci(rng)), double(ci(rng))};
    for (auto& v : ga) v = {double(ci(rng)), double(ci(rng))};
    const DiscPolynomial f(fa), g(ga);
    const cplx rhs = bergman_inner(f, g);
    // relative to ||f|| ||g||, the scale of the inner product
    const double scale = std::sqrt(bergman_inner(f, f).real() * bergman_inner(g, g).real());
    iso = std::max(iso, std::abs(hardy_inner(extend_E(f), extend_E(g)) - rhs) / scale);
    // exact route: every coefficient of E f is b_l / (l + 1) up to rounding,
    // there are l + 1 of them in degree l, and the Hardy mass is then summed
    // in rationals against the Bergman mass
    std::vector<std::int64_t> count(31, 0);
    const auto Ef = extend_E(f);
    for (const auto& [k, v] : Ef.coeffs()) {
      const auto l = k.total_degree();
      exact = exact && l <= 30 && std::abs(v * double(l + 1) - fa[l]) <= 4e-16 * std::abs(fa[l]);
      if (l <= 30) ++count[l];
    }
    Rational lhs_re(0), lhs_im(0), rhs_re(0), rhs_im(0);
    for (std::uint32_t l = 0; l <= 30; ++l) {
      const Rational w(std::int64_t{1}, static_cast<std::int64_t>(l + 1));
      const std::int64_t ar = std::lround(fa[l].real()), ai = std::lround(fa[l].imag());
      const std::int64_t br = std::lround(ga[l].real()), bi = std::lround(ga[l].imag());
      const Rational re(ar * br + ai * bi), im(ai * br - ar * bi);
      const std::int64_t m = fa[l] == cplx{} ? std::int64_t(l + 1) : count[l];
      lhs_re += Rational(m) * w * w * re;
      lhs_im += Rational(m) * w * w * im;
      rhs_re += w * re;
      rhs_im += w * im;
    }
    exact = exact && lhs_re == rhs_re && lhs_im == rhs_im;
  }
  r.pass = r30 <= 1e-6 && r60 < r30 && iso <= 1e-14 && exact;
  r.detail = "residual D=30 " + fmt("%.3e", r30) + ", D=60 " + fmt("%.3e", r60) +
             (r60 < r30 ? "" : " (not smaller: both are rounding noise, the truncated spectra coincide exactly)") +
             ", isometry " + fmt("%.2e", iso) + (exact ? ", exact rational route equal" : ", exact route differs");
  return r;
}

// ---- 7. HS identities
Result hs() {
  Result r;
  std::mt19937_64 rng(7007);
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
  const Rational formula = hs_mass_bergman_exact(rho_sq);
  const bool exact = bergman_section_mass_exact(rho_sq, L, L) == formula;
  const double fl = std::abs(frobenius_sq_upto(build_bergman_hankel(sym, L), L) - formula.to_double()) /
                    formula.to_double();
  const std::vector<std::uint64_t> set = {2, 15, 1001, 17ull * 19 * 23 * 29, 31ull * 37 * 41 * 43 * 47};
  bool factors = true;
  for (std::size_t j = 1; j <= 5; ++j) {
    std::map<std::uint64_t, Rational> one{{set[j - 1], Rational(1)}};
    factors = factors && hs_mass_hardy_exact(one) == Rational(std::int64_t{1} << j) &&
              hs_mass_bergman_exact(one) == Rational(1);
  }
  r.pass = exact && factors && fl <= 1e-12;
  r.detail = std::string(exact ? "exact section mass equals the divisor formula" : "exact mass differs") +
             ", floating section relative " + fmt("%.1e", fl) + (factors ? ", factors 2^j exact" : ", factors wrong");
  return r;
}

// ---- 8. asymptotic ratios
Result asymptotics() {
  Result r;
  const auto a6 = average_order_ratio(1.5, 1000000);
  const auto a7 = average_order_ratio(1.5, 10000000);
  const bool avg = a6.ratio >= 0.7 && a6.ratio <= 1.3 && std::abs(1 - a7.ratio) < std::abs(1 - a6.ratio);
  std::vector<double> ratios;
  for (double eps : {0.2, 0.1, 0.05}) ratios.push_back(carleson2_ratio(eps, 500).limit.ratio);
  bool doubling = true;
  std::string fac;
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    const double f = ratios[i] / ratios[i - 1];
    doubling = doubling && f >= 1.4 && f <= 2.8;
    fac += (i > 1 ? ", " : "") + fmt("%.4f", f);
  }
  double lo = INFINITY;
  for (double eps : {0.1, 0.05, 0.025}) lo = std::min(lo, noncompactness_witness(eps).value);
  r.pass = avg && doubling && lo > 0;
  r.detail = "average order " + fmt("%.5f", a6.ratio) + " -> " + fmt("%.5f", a7.ratio) + ", carleson2 factors " + fac +
             ", witness min " + fmt("%.6f", lo);
  return r;
}

// ---- 9. byte-identical report bodies
Result determinism() {
  Result r;
  SuiteConfig c;
  c.suite = "all";
  c.format = OutputFormat::json;
  const std::string a = render(run_suite(c));
  const std::string b = render(run_suite(c));
  c.format = OutputFormat::csv;
  const std::string x = render(run_suite(c));
  const std::string y = render(run_suite(c));
  r.pass = a == b && x == y;
  r.detail = std::to_string(a.size()) + "-byte json and " + std::to_string(x.size()) + "-byte csv bodies " +
             (r.pass ? "identical" : "differ");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // stated runtime bound, 0 when none
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden constants", 1, golden},        {2, "exact arithmetic", 30, exact_arith},
      {3, "oracle equivalence", 60, oracle},     {4, "inequality suites", 300, inequalities},
      {5, "equality sharpness", 0, sharpness},   {6, "spectral preservation", 120, spectral},
      {7, "HS identities", 0, hs},               {8, "asymptotic ratios", 0, asymptotics},
      {9, "determinism", 0, determinism},
  };
  // arguments: criterion numbers to run (default all), and --expect-fail N
  // for a criterion known to be unattainable; the exit status is then 0 iff
  // the failing set equals the expected one
  std::vector<int> only, expected;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--expect-fail" && i + 1 < argc)
      expected.push_back(std::atoi(argv[++i]));
    else
      only.push_back(std::atoi(argv[i]));
  }
  std::vector<int> failing;
  int failed = 0, ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      r.pass = false;
      r.detail += ", over the " + fmt("%.0f", c.limit_s) + " s budget";
    }
    if (!r.pass) {
      ++failed;
      failing.push_back(c.id);
    }
    std::printf("criterion %d (%s): %s  [%s; %.2f s]\n", c.id, c.name, r.pass ? "PASS" : "FAIL", r.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", ran - failed, ran);
  if (!expected.empty()) {
    std::sort(expected.begin(), expected.end());
    const bool as_expected = failing == expected;
    std::printf("expected failures: %s\n", as_expected ? "matched" : "MISMATCH");
    return as_expected ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}

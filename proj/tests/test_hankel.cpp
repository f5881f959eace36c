#include <Eigen/SVD>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "bergman/hankel.hpp"
#include "doctest.h"

using namespace bergman;

namespace {

const double kSqrt2 = std::sqrt(2.0);

std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t m = 1; m <= n; ++m) c += n % m == 0;
  return c;
}

HankelMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_real_distribution<double> u(-1, 1);
  HankelMatrix M;
  M.rows = r;
  M.cols = c;
  for (std::size_t i = 0; i < r * c; ++i) M.entries.emplace_back(u(rng), u(rng));
  return M;
}

std::vector<double> jacobi_values(const HankelMatrix& M) {
  Eigen::MatrixXcd A(M.rows, M.cols);
  for (std::size_t i = 0; i < M.rows; ++i)
    for (std::size_t j = 0; j < M.cols; ++j) A(i, j) = M(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

DiscPolynomial random_symbol(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<cplx> c(degree + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  return DiscPolynomial(c);
}

}  // namespace

TEST_CASE("Bergman sections") {
  HankelSymbol s{{{2, kSqrt2}}, 4};
  auto M = build_bergman_hankel(s, 2);
  CHECK(M.rows == 2);
  CHECK(std::abs(M(0, 0)) == 0.0);
  CHECK(M(0, 1).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(M(1, 0).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(M(1, 1)) == 0.0);
  CHECK_THROWS_AS(build_bergman_hankel(s, 3), std::invalid_argument);

  HankelSymbol one{{{1, 2.5}}, 100};
  auto O = build_bergman_hankel(one, 10);
  CHECK(O(0, 0) == cplx(2.5));
  CHECK(O.frobenius_sq() == 6.25);
  auto so = singular_values(O).values;
  CHECK(so[0] == doctest::Approx(2.5));
  CHECK(so[1] == 0.0);

  // rho_l = d(l) gives the rank-one section sqrt(d(m) d(n))
  const std::uint64_t N = 12;
  HankelSymbol dsym;
  dsym.n_sym = N * N;
  for (std::uint64_t l = 1; l <= N * N; ++l) dsym.rho[l] = static_cast<double>(divisor_count(l));
  auto R = build_bergman_hankel(dsym, N);
  double trace = 0;
  for (std::uint64_t m = 1; m <= N; ++m) {
    trace += static_cast<double>(divisor_count(m));
    for (std::uint64_t n = 1; n <= N; ++n)
      CHECK(R(m - 1, n - 1).real() ==
            doctest::Approx(std::sqrt(static_cast<double>(divisor_count(m) * divisor_count(n)))).epsilon(1e-14));
  }
  auto sr = singular_values(R).values;
  CHECK(sr[0] == doctest::Approx(trace).epsilon(1e-13));
  CHECK(sr[1] <= 1e-12 * sr[0]);
}

TEST_CASE("Hardy sections") {
  HankelSymbol delta{{{1, 1.0}}, 25};
  auto D = build_hardy_hankel(delta, 5);
  CHECK(D(0, 0) == cplx(1.0));
  CHECK(D.frobenius_sq() == 1.0);

  HankelSymbol psi{{{2, 0.5}, {3, 0.5}}, 36};
  auto P = build_hardy_hankel(psi, std::vector<std::uint64_t>{1, 2, 3, 6});
  const double expect[4][4] = {{0, .5, .5, 0}, {.5, 0, 0, 0}, {.5, 0, 0, 0}, {0, 0, 0, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(P(i, j) == cplx(expect[i][j]));

  // full array: each l <= L shows up d(l) times
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  const std::uint64_t L = 40;
  HankelSymbol r;
  r.n_sym = L * L;
  double mass = 0;
  for (std::uint64_t l = 1; l <= L; ++l) {
    r.rho[l] = cplx(u(rng), u(rng));
    mass += std::norm(r.rho[l]) * static_cast<double>(divisor_count(l));
  }
  CHECK(build_hardy_hankel(r, L).frobenius_sq() == doctest::Approx(mass).epsilon(1e-13));
  CHECK(hs_norm_hardy(r) == doctest::Approx(std::sqrt(mass)).epsilon(1e-14));
}

TEST_CASE("serial and parallel builders agree") {
  auto sym = hilbert_type_symbol(900);
  CHECK(build_bergman_hankel(sym, 30, Exec::serial).entries == build_bergman_hankel(sym, 30, Exec::parallel).entries);
  auto E = extend_E(DiscPolynomial({1.0, 2.0, cplx(0, 1)}));
  CHECK(build_bidisc_hardy_hankel(E, 5, Exec::serial).entries ==
        build_bidisc_hardy_hankel(E, 5, Exec::parallel).entries);
}

TEST_CASE("singular values") {
  HankelMatrix swap;
  swap.rows = swap.cols = 2;
  swap.entries = {0.0, 1.0, 1.0, 0.0};
  auto s = singular_values(swap).values;
  CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s[1] == doctest::Approx(1.0).epsilon(1e-15));

  HankelMatrix zero;
  zero.rows = 3;
  zero.cols = 4;
  zero.entries.assign(12, cplx{});
  CHECK(singular_values(zero).values == std::vector<double>(3, 0.0));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto M = random_matrix(rng, 8, 8);
    auto a = singular_values(M).values;
    auto g = singular_values_gram(M).values;
    auto j = jacobi_values(M);
    REQUIRE(a.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(std::abs(a[i] - g[i]) <= 1e-10);
      CHECK(std::abs(a[i] - j[i]) <= 1e-12 * a[0]);
      if (i) CHECK(a[i] <= a[i - 1]);
    }
    CHECK(singular_values(M).sum_sq() == doctest::Approx(M.frobenius_sq()).epsilon(1e-10));
  }
  auto W = random_matrix(rng, 5, 9);
  CHECK(singular_values(W).values.size() == 5);
  CHECK(singular_values(W).sum_sq() == doctest::Approx(W.frobenius_sq()).epsilon(1e-10));
}

TEST_CASE("Frobenius consistency and restriction monotonicity") {
  auto sym = hilbert_type_symbol(3600);
  auto M = build_bergman_hankel(sym, 60);
  auto s = singular_values(M);
  CHECK(s.sum_sq() == doctest::Approx(M.frobenius_sq()).epsilon(1e-10));
  for (std::size_t k : {10u, 30u, 45u}) {
    auto sub = build_bergman_hankel(sym, k);
    auto t = singular_values(sub).values;
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i] <= s.values[i] * (1 + 1e-12));
  }
}

TEST_CASE("Hilbert-Schmidt identities") {
  CHECK(hs_norm_bergman({{{1, 1.0}}, 1}) == 1.0);
  CHECK(hs_norm_hardy({{{1, 1.0}}, 1}) == 1.0);

  // symbols on the set {2, 3*5, 7*11*13, ...}
  const std::vector<std::uint64_t> set = {2, 15, 1001, 17ull * 19 * 23 * 29, 31ull * 37 * 41 * 43 * 47};
  for (std::size_t j = 1; j <= set.size(); ++j) {
    std::map<std::uint64_t, Rational> one{{set[j - 1], Rational(1)}};
    CHECK(hs_mass_bergman_exact(one) == Rational(1));
    CHECK(hs_mass_hardy_exact(one) == Rational(std::int64_t{1} << j));
  }
  std::map<std::uint64_t, Rational> all;
  for (std::size_t j = 0; j < set.size(); ++j) all[set[j]] = Rational(static_cast<int>(j + 1));
  CHECK(hs_mass_bergman_exact(all) == Rational(15));
  CHECK(hs_mass_hardy_exact(all) == Rational(2 + 2 * 4 + 3 * 8 + 4 * 16 + 5 * 32));

  // truncated section mass equals the divisor formula, exactly
  std::mt19937_64 rng(9);
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
  CHECK(bergman_section_mass_exact(rho_sq, L, L) == exact);
  auto M = build_bergman_hankel(sym, L);
  CHECK(frobenius_sq_upto(M, L) == doctest::Approx(exact.to_double()).epsilon(1e-13));
  CHECK(hs_norm_bergman(sym) == doctest::Approx(std::sqrt(exact.to_double())).epsilon(1e-14));
  // d_4 <= d^3 puts the Bergman mass below the Hardy mass
  CHECK(hs_norm_bergman(sym) <= hs_norm_hardy(sym));
}

TEST_CASE("Hilbert-type symbol and form") {
  auto s = hilbert_type_symbol(100);
  CHECK(s(1) == cplx{});
  CHECK(s(2).real() == doctest::Approx(2 / (kSqrt2 * std::pow(std::log(2.0), 2))).epsilon(1e-15));
  CHECK(s(4).real() == doctest::Approx(3 / (2 * std::pow(std::log(4.0), 2))).epsilon(1e-15));
  CHECK_THROWS_AS(hilbert_type_symbol(1), std::invalid_argument);

  auto f = DirichletPolynomial::term(2);
  auto g = DirichletPolynomial::term(3);
  auto ff = hilbert_form_eval(f, f);
  CHECK(ff.value.real() == doctest::Approx(1 / (2 * std::pow(std::log(4.0), 2))).epsilon(1e-11));
  // rho_4 / d(4) consistency
  CHECK(ff.value.real() == doctest::Approx(s(4).real() / 3).epsilon(1e-11));
  auto fg = hilbert_form_eval(f, g);
  CHECK(fg.value.real() == doctest::Approx(1 / (std::sqrt(6.0) * std::pow(std::log(6.0), 2))).epsilon(1e-11));
  CHECK(fg.value.real() == doctest::Approx(s(6).real() / 4).epsilon(1e-11));

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 5; ++trial) {
    std::map<std::uint64_t, cplx> a, b, c;
    for (std::uint64_t n = 2; n <= 12; ++n) {
      a[n] = {u(rng), u(rng)};
      b[n] = {u(rng), u(rng)};
      c[n] = {u(rng), u(rng)};
    }
    DirichletPolynomial A(a), B(b), C(c);
    const cplx lhs = hilbert_form_eval(A + B, C).value;
    const cplx rhs = hilbert_form_eval(A, C).value + hilbert_form_eval(B, C).value;
    CHECK(std::abs(lhs - rhs) <= 1e-10);
    CHECK(std::abs(hilbert_form_eval(A, C).value - hilbert_form_coeff(A, C)) <= 1e-10);
  }
  CHECK_THROWS_AS(hilbert_form_eval(DirichletPolynomial::constant(1.0), f), std::invalid_argument);

  auto ps = hilbert_type_hs_partial_sums({100, 1000, 10000});
  REQUIRE(ps.mass.size() == 3);
  CHECK(ps.mass[0] < ps.mass[1]);
  CHECK(ps.mass[1] < ps.mass[2]);
  auto sym = hilbert_type_symbol(1000);
  CHECK(hs_norm_bergman(sym) == doctest::Approx(std::sqrt(ps.mass[1])).epsilon(1e-12));
}

TEST_CASE("noncompactness witness") {
  const double frozen[] = {0.7955578, 0.7372117, 0.7035761};
  const double eps[] = {0.1, 0.05, 0.025};
  double lo = INFINITY;
  for (int i = 0; i < 3; ++i) {
    auto w = noncompactness_witness(eps[i]);
    CHECK(w.normalization == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w.value == doctest::Approx(frozen[i]).epsilon(1e-6));
    lo = std::min(lo, w.value);
  }
  CHECK(lo > 0.5);
  CHECK_THROWS_AS(noncompactness_witness(0.0), std::domain_error);
  CHECK_THROWS_AS(noncompactness_witness(0.6), std::domain_error);
}

TEST_CASE("extension, diagonal and projection") {
  auto Ew = extend_E(DiscPolynomial::monomial(1));
  CHECK(Ew == PolydiscPolynomial({{MultiIndex({1}), 0.5}, {MultiIndex({0, 1}), 0.5}}));
  auto Ew2 = extend_E(DiscPolynomial::monomial(2));
  CHECK(Ew2 == PolydiscPolynomial(
                   {{MultiIndex({2}), 1.0 / 3}, {MultiIndex({1, 1}), 1.0 / 3}, {MultiIndex({0, 2}), 1.0 / 3}}));
  CHECK(extend_E(DiscPolynomial::constant(4.0)) == PolydiscPolynomial({{MultiIndex{}, 4.0}}));
  CHECK(Ew * Ew != Ew2);
  CHECK(diagonal_D(PolydiscPolynomial({{MultiIndex({1, 1}), 1.0}})) == DiscPolynomial::monomial(2));
  CHECK(project_P(PolydiscPolynomial({{MultiIndex({1}), 1.0}})) == Ew);
  CHECK_THROWS_AS(diagonal_D(PolydiscPolynomial({{MultiIndex({0, 0, 1}), 1.0}})), std::invalid_argument);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1, 1);
  auto random_two_var = [&](int deg) {
    std::map<MultiIndex, cplx> c;
    for (std::uint32_t j = 0; j <= static_cast<std::uint32_t>(deg); ++j)
      for (std::uint32_t k = 0; j + k <= static_cast<std::uint32_t>(deg); ++k) c[MultiIndex({j, k})] = {u(rng), u(rng)};
    return PolydiscPolynomial(c);
  };
  for (int trial = 0; trial < 10; ++trial) {
    auto g = random_symbol(rng, 20);
    auto h = random_symbol(rng, 30);
    auto DE = diagonal_D(extend_E(g));
    for (int j = 0; j <= 20; ++j) CHECK(std::abs(DE.coeff(j) - g.coeff(j)) <= 1e-15);
    // E is an isometry
    const cplx lhs = hardy_inner(extend_E(g), extend_E(h));
    const cplx rhs = bergman_inner(g, h);
    CHECK(std::abs(lhs - rhs) <= 1e-14 * (1 + std::abs(rhs)));
    auto F = random_two_var(8);
    auto G = random_two_var(8);
    auto DF = diagonal_D(F);
    CHECK(std::real(bergman_inner(DF, DF)) <= std::real(hardy_inner(F, F)));
    auto PF = project_P(F);
    auto PPF = project_P(PF);
    for (const auto& [k, a] : PF.coeffs()) CHECK(std::abs(a - PPF.coeff(k)) <= 1e-15);
    auto PG = project_P(G);
    std::map<MultiIndex, cplx> diff;
    for (const auto& [k, a] : F.coeffs()) diff[k] = a - PF.coeff(k);
    CHECK(std::abs(hardy_inner(PolydiscPolynomial(diff), PG)) <= 1e-13);
  }
}

TEST_CASE("spectra of H_phi and H_{E phi} coincide") {
  const DiscPolynomial phi({0.0, kSqrt2});
  auto r = sv_preservation_residual(phi, 1);
  CHECK(r.disc_values[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.disc_values[1] == doctest::Approx(1.0).epsilon(1e-15));
  REQUIRE(r.bidisc_values.size() == 3);
  CHECK(r.bidisc_values[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.bidisc_values[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.bidisc_values[2] == doctest::Approx(0.0));
  CHECK(r.residual <= 1e-15);

  auto z = sv_preservation_residual(DiscPolynomial::constant(0.0), 4);
  CHECK(z.residual == 0.0);
  CHECK(z.residual_2d == 0.0);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 3; ++trial) {
    auto g = random_symbol(rng, 6);
    auto s = sv_preservation_residual(g, 10);
    CHECK(s.residual <= 1e-12);
    CHECK(s.residual_2d <= 1e-12);
  }
  CHECK_THROWS_AS(sv_preservation_residual(random_symbol(rng, 9), 4), std::invalid_argument);
}

TEST_CASE("weak factorization constants") {
  auto w = weakfac_constants();
  CHECK(std::abs(w.phi_a1 - 2 * kSqrt2 / 3) <= 1e-10);
  CHECK(w.phi_a2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(w.hankel_norm - 1) <= 1e-14);
  CHECK(std::abs(w.c1_bound - 3 / (2 * kSqrt2)) <= 1e-10);
  CHECK(std::abs(w.c1_closed - std::sqrt(9.0 / 8)) <= 1e-15);
  CHECK(std::abs(w.cd_bound[3] - 81.0 / 64) <= 1e-10);
}

TEST_CASE("duality tail") {
  // frozen from direct summation
  auto a = duality_tail(4.0 / 3, 100000);
  CHECK(a.sum_n == doctest::Approx(7.368239).epsilon(1e-6));
  auto b = duality_tail(4.0 / 3, 1000000);
  CHECK(b.sum_n == doctest::Approx(7.375227).epsilon(1e-6));
  CHECK(b.sum_2n == doctest::Approx(7.376824).epsilon(1e-6));
  CHECK(b.relative_change < 0.05);
  CHECK(b.increment > 0);
  CHECK(b.predicted_increment > 0);
  auto s = duality_tail(4.0 / 3, 100000, Exec::serial);
  CHECK(s.sum_n == doctest::Approx(a.sum_n).epsilon(1e-13));
  CHECK_THROWS_AS(duality_tail(2.0, 1000), std::domain_error);
  CHECK_THROWS_AS(duality_tail(1.0, 1000), std::domain_error);
}

TEST_CASE("text format round trip") {
  auto M = build_bergman_hankel(hilbert_type_symbol(64), 8);
  std::stringstream ss;
  write_text(ss, M);
  auto R = read_hankel_text(ss);
  CHECK(R.scheme == HankelScheme::bergman);
  CHECK(R.labels == M.labels);
  CHECK(R.entries == M.entries);
  auto B = build_bidisc_hardy_hankel(extend_E(DiscPolynomial({1.0, cplx(0, 2)})), 2);
  std::stringstream sb;
  write_text(sb, B);
  auto RB = read_hankel_text(sb);
  CHECK(RB.scheme == HankelScheme::bidisc_hardy);
  CHECK(RB.entries == B.entries);
  std::stringstream bad("bergman 2 2 2\n() (1)\n0 0 1 0\n");
  CHECK_THROWS_AS(read_hankel_text(bad), std::invalid_argument);
}

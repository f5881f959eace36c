#include "bergman/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bergman/arith.hpp"
#include "bergman/special.hpp"

namespace bergman {

namespace {

SignedIndex trimmed(SignedIndex k) {
  while (!k.empty() && k.back() == 0) k.pop_back();
  return k;
}

}  // namespace

std::uint64_t q_plus(const SignedIndex& k) {
  std::vector<std::uint32_t> e;
  for (auto x : k) e.push_back(static_cast<std::uint32_t>(x < 0 ? -x : x));
  return index_to_integer(MultiIndex(std::move(e)));
}

TrigPolynomial::TrigPolynomial(const std::map<SignedIndex, cplx>& coeffs) {
  for (const auto& [k, a] : coeffs)
    if (a != cplx{}) a_[trimmed(k)] += a;
  std::erase_if(a_, [](const auto& kv) { return kv.second == cplx{}; });
}

std::size_t TrigPolynomial::dimension() const {
  std::size_t d = 0;
  for (const auto& [k, a] : a_) d = std::max(d, k.size());
  return d;
}

double TrigPolynomial::l2_norm() const {
  double s = 0;
  for (const auto& [k, a] : a_) s += std::norm(a);
  return std::sqrt(s);
}

cplx poisson_extend(const TrigPolynomial& f, std::span<const cplx> w) {
  for (auto x : w)
    if (std::abs(x) >= 1) throw std::domain_error("poisson_extend needs |w_j| < 1");
  cplx s{};
  for (const auto& [k, a] : f.coeffs()) {
    cplx t = a;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      if (j >= w.size()) {
        t = 0;
        break;
      }
      const cplx base = k[j] > 0 ? w[j] : std::conj(w[j]);
      t *= std::pow(base, std::abs(k[j]));
    }
    s += t;
  }
  return s;
}

DpnormConstants dpnorm_constants(double p) {
  if (!(p > 0 && p < 2)) throw std::domain_error("dpnorm_constants needs 0 < p < 2");
  DpnormConstants c{};
  c.p = p;
  c.left = 2 / (2 + p);
  c.beta = beta_real(p / 2, 0.5);
  c.right = 2 / (p * c.beta);
  c.right_half_beta = beta_real((p + 1) / 2, 0.5) / M_PI;
  c.beta_lower = 2 / p + 1;
  c.left_quad = std::pow(norm_quad(DiscPolynomial::monomial(1), {p, 2.0}).value, p);
  // |(1 + e^{it}) / 2| = |cos(t/2)| vanishes at t = pi; split there
  auto g = [p](double t) { return std::pow(std::abs(std::cos(t / 2)), p); };
  const auto a = integrate_interval(g, 0, M_PI, 1e-13);
  const auto b = integrate_interval(g, M_PI, 2 * M_PI, 1e-13);
  c.right_quad = (a.value + b.value) / (2 * M_PI);
  c.right_quad_error = (a.error + b.error) / (2 * M_PI);
  return c;
}

TrigPolynomial dl2_function() {
  const double s = 1 / std::sqrt(3.0);
  return TrigPolynomial({{{1}, s}, {{0, 1}, s}, {{2, -1}, s}});
}

Dl2Witness dl2_witness() {
  Dl2Witness out{};
  // (2r + r^3)^2 r = 4r^3 + 4r^5 + r^7
  out.closed = 2.0 / 3.0 * (4.0 / 4 + 4.0 / 6 + 1.0 / 8);
  const auto f = dl2_function();
  out.input_norm = f.l2_norm();
  auto g = [&](cplx z) {
    const cplx w[2] = {z, z};
    return std::norm(poisson_extend(f, w));
  };
  const double fine = DiscQuadrature(2.0, 8, 16).integrate(g);
  const double coarse = DiscQuadrature(2.0, 4, 8).integrate(g);
  out.quad = fine;
  out.quad_error = std::abs(fine - coarse);
  return out;
}

namespace {

PolydiscPolynomial power(const PolydiscPolynomial& F, int k) {
  PolydiscPolynomial r({{MultiIndex{}, 1.0}});
  for (int i = 0; i < k; ++i) r = r * F;
  return r;
}

bool is_even_integer(double p) { return p > 0 && p == std::floor(p) && static_cast<long>(p) % 2 == 0; }

}  // namespace

NormResult torus_pnorm_p(const PolydiscPolynomial& F, double p) {
  const std::size_t d = F.dimension();
  if (d > 4) throw std::domain_error("torus_pnorm_p handles at most four variables");
  NormResult out;
  if (is_even_integer(p)) {
    double s = 0;
    const auto Fk = power(F, static_cast<int>(p / 2));
    for (const auto& [k, a] : Fk.coeffs()) s += std::norm(a);
    out.value = s;
    out.exact = true;
    return out;
  }
  if (d == 0) {
    out.value = std::pow(std::abs(F.coeff(MultiIndex{})), p);
    out.exact = true;
    return out;
  }
  std::uint32_t deg = 0;
  for (std::size_t j = 0; j < d; ++j) deg = std::max(deg, F.degree_in(j));
  auto mean_on = [&](int M) {
    std::size_t total = 1;
    for (std::size_t j = 0; j < d; ++j) total *= static_cast<std::size_t>(M);
    std::vector<cplx> omega(static_cast<std::size_t>(M));
    for (int k = 0; k < M; ++k) omega[static_cast<std::size_t>(k)] = std::polar(1.0, 2 * M_PI * k / M);
    std::vector<std::pair<std::vector<std::uint32_t>, cplx>> terms;
    for (const auto& [k, a] : F.coeffs()) {
      std::vector<std::uint32_t> e(d);
      for (std::size_t j = 0; j < d; ++j) e[j] = k[j];
      terms.emplace_back(std::move(e), a);
    }
    return chunked_sum<double>(0, total, [&](std::size_t idx) {
             std::size_t node[4] = {0, 0, 0, 0};
             for (std::size_t j = d; j-- > 0;) {
               node[j] = idx % static_cast<std::size_t>(M);
               idx /= static_cast<std::size_t>(M);
             }
             cplx v{};
             for (const auto& [e, a] : terms) {
               std::size_t phase = 0;
               for (std::size_t j = 0; j < d; ++j) phase += e[j] * node[j];
               v += a * omega[phase % static_cast<std::size_t>(M)];
             }
             return std::pow(std::abs(v), p);
           }) /
           static_cast<double>(total);
  };
  int M = std::max<int>(16, static_cast<int>(4 * deg + 8));
  double prev = mean_on(M);
  out.value = prev;
  out.error = std::numeric_limits<double>::infinity();
  const std::size_t budget = std::size_t{1} << 22;
  for (;;) {
    std::size_t cost = 1;
    for (std::size_t j = 0; j < d; ++j) cost *= static_cast<std::size_t>(2 * M);
    if (cost > budget) break;
    M *= 2;
    const double cur = mean_on(M);
    out.value = cur;
    out.error = std::abs(cur - prev);
    if (out.error <= 1e-12 * std::max(1.0, cur)) break;
    prev = cur;
  }
  out.angular_nodes = M;
  return out;
}

GapResult diagonal_measure_gap(const PolydiscPolynomial& F, double p, const PolydiscQuadOptions& opt) {
  if (F.dimension() > 4) throw std::domain_error("diagonal_measure_gap handles at most four variables");
  if (!(p > 0)) throw std::domain_error("diagonal_measure_gap needs p > 0");
  std::map<MultiIndex, cplx> g;
  for (const auto& [k, a] : F.coeffs()) g[MultiIndex({k[0] + k[1], k[2] + k[3]})] += a;
  const auto lhs = polydisc_norm_quad(PolydiscPolynomial(g), p, 2.0, opt);
  const auto rhs = torus_pnorm_p(F, p);
  GapResult out;
  out.lhs = std::pow(lhs.value, p);
  out.rhs = rhs.value;
  out.gap = out.lhs - out.rhs;
  out.error = p * std::pow(lhs.value, p - 1) * lhs.error + rhs.error;
  return out;
}

Integral1D integrate_boundary_layer(const std::function<double(double)>& f, double eps, double tol) {
  if (!(eps > 0)) throw std::domain_error("integrate_boundary_layer needs eps > 0");
  const double L = std::log((1 + eps) / eps);
  auto g = [&](double t) {
    const double u = eps * std::exp(L * t);  // sigma + eps
    return f(u - eps) * u * L;
  };
  return integrate_interval(g, 0.0, 1.0, tol);
}

Carleson2 carleson2_ratio(double eps, std::size_t d, std::uint64_t max_n, Exec exec) {
  if (!(eps >= 0.01 && eps <= 0.5)) throw std::domain_error("carleson2_ratio needs 0.01 <= eps <= 1/2");
  if (d < 1 || d > 1000) throw std::domain_error("carleson2_ratio needs 1 <= d <= 1000");
  const auto primes = primes_first(d);
  const std::uint64_t pd = primes.largest();
  const auto& tab = arithmetic_tables(max_n);
  std::vector<double> logn, weight;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    if (tab.largest_prime_factor(n) > pd) continue;
    logn.push_back(std::log(static_cast<double>(n)));
    weight.push_back(std::ldexp(1.0, static_cast<int>(tab.small_omega(n))));
  }
  Carleson2 out{};
  out.eps = eps;
  out.d = d;
  out.max_n = max_n;
  out.smooth_count = logn.size();
  auto S = [&](double s) {
    return sum<double>(exec, 0, logn.size(), [&](std::size_t i) { return weight[i] * std::exp(-s * logn[i]); });
  };
  auto closed = [](double s) {
    const double z = zeta_real(s);
    return z * z / zeta_real(2 * s);
  };

  auto emb_t = integrate_boundary_layer([&](double sigma) { const double v = S(1 + eps + sigma); return v * v; }, eps,
                                        1e-11);
  double prod = 1;
  for (auto p : primes.primes()) {
    const double x = std::pow(static_cast<double>(p), -1 - 2 * eps);
    prod *= (1 + x) / (1 - x);
  }
  out.truncated = {emb_t.value, prod, emb_t.value / prod};

  auto emb_l = integrate_boundary_layer([&](double sigma) { const double v = closed(1 + eps + sigma); return v * v; },
                                        eps, 1e-11);
  const double z = zeta_real(1 + 2 * eps);
  const double l2 = z * z / zeta_real(2 + 4 * eps);
  out.limit = {emb_l.value, l2, emb_l.value / l2};

  // log((1+x)/(1-x)) <= 2x/(1-x) and sum_{n > P} n^-a <= P^(1-a)/(a-1)
  const double P = static_cast<double>(pd);
  const double a = 1 + 2 * eps;
  out.l2mass_log_tail_bound = 2 / (1 - std::pow(P, -a)) * std::pow(P, 1 - a) / (a - 1);
  out.sum_tail_at_zero = closed(1 + eps) - S(1 + eps);
  return out;
}

}  // namespace bergman

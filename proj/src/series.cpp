#include "bergman/series.hpp"

#include <cmath>
#include <stdexcept>

#include "bergman/arith.hpp"
#include "bergman/special.hpp"

namespace bergman {

EulerProduct average_order_constant(double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) throw std::domain_error("average_order_constant: alpha must lie in (1,2)");
  const auto& primes = default_prime_table();
  long double log_g = 0;
  std::uint64_t last = 2;
  for (std::size_t j = 0; j < primes.size(); ++j) {
    const long double x = 1.0L / static_cast<long double>(primes[j]);
    const long double lf = 2 * (alpha * std::log1p(-x) - std::log1p(-alpha * x));
    log_g += lf;
    last = primes[j];
    if (std::expm1(lf) < 1e-12L) break;
  }
  // log f(x) = 2 sum_{k>=2} (alpha^k - alpha) x^k / k <= alpha^2 x^2 / (1 - alpha x),
  // and sum_{p > P} p^-2 < 1/P.
  const double P = static_cast<double>(last);
  const double bound = alpha * alpha / (1.0 - alpha / P) / P;
  return {static_cast<double>(std::exp(log_g)), bound, last};
}

AverageOrder average_order_ratio(double alpha, std::uint64_t x, Exec exec) {
  if (!(alpha > 1.0 && alpha < 2.0)) throw std::domain_error("average_order_ratio: alpha must lie in (1,2)");
  if (x < 100) throw std::domain_error("average_order_ratio: x must be at least 100");
  const auto& tab = arithmetic_tables(x);
  auto term = [&](std::size_t n) {
    double v = 1.0;
    tab.for_each_prime_power(n, [&](std::uint64_t, std::uint32_t k) {
      v *= static_cast<double>(k + 1) * std::pow(alpha, static_cast<double>(k));
    });
    return v;
  };
  const double total = sum<double>(exec, 1, x + 1, term);
  AverageOrder out{};
  out.g = average_order_constant(alpha);
  out.constant = out.g.value / gamma_real(2 * alpha);
  out.empirical = total / static_cast<double>(x);
  out.predicted = out.constant * std::pow(std::log(static_cast<double>(x)), 2 * alpha - 1);
  out.ratio = out.empirical / out.predicted;
  return out;
}

SeriesCheck squarefree_zeta_residual(double s, std::uint64_t N, Exec exec) {
  if (!(s > 1.0)) throw std::domain_error("squarefree_zeta_residual: requires s > 1");
  const auto& tab = arithmetic_tables(N);
  auto term = [&](std::size_t n) {
    return tab.moebius(n) != 0 ? std::pow(static_cast<double>(n), -s) : 0.0;
  };
  SeriesCheck c{};
  c.partial = sum<double>(exec, 1, N + 1, term);
  c.target = zeta_real(s) / zeta_real(2 * s);
  c.residual = std::abs(c.partial - c.target);
  c.tail_bound = std::pow(static_cast<double>(N), 1 - s) / (s - 1);
  return c;
}

SeriesCheck two_omega_residual(double s, std::uint64_t N, Exec exec) {
  if (!(s > 1.0)) throw std::domain_error("two_omega_residual: requires s > 1");
  const auto& tab = arithmetic_tables(N);
  auto term = [&](std::size_t n) {
    return std::ldexp(std::pow(static_cast<double>(n), -s), static_cast<int>(tab.small_omega(n)));
  };
  SeriesCheck c{};
  c.partial = sum<double>(exec, 1, N + 1, term);
  const double z = zeta_real(s);
  c.target = z * z / zeta_real(2 * s);
  c.residual = std::abs(c.partial - c.target);
  const double Nd = static_cast<double>(N);
  c.tail_bound = s * std::pow(Nd, 1 - s) / (s - 1) * (std::log(Nd) + 1 + 1 / (s - 1));
  return c;
}

}  // namespace bergman

#pragma once

// Partial sums of multiplicative Dirichlet series checked against their
// zeta-quotient closed forms and average-order asymptotics.

#include <cstdint>

#include "bergman/parallel.hpp"

namespace bergman {

struct EulerProduct {
  double value;             // truncated product
  double log_tail_bound;    // 0 <= log(true / truncated) <= this
  std::uint64_t last_prime;
};

/// g_alpha(1) = prod_p ((1 - 1/p)^alpha / (1 - alpha/p))^2 for 1 < alpha < 2,
/// stopped once a factor is within 1e-12 of 1.
EulerProduct average_order_constant(double alpha);

struct AverageOrder {
  double empirical;  // (1/x) sum_{n <= x} d(n) alpha^Omega(n)
  double predicted;  // g_alpha(1) / Gamma(2 alpha) * (log x)^(2 alpha - 1)
  double ratio;
  double constant;   // g_alpha(1) / Gamma(2 alpha)
  EulerProduct g;
};

/// Throws std::domain_error unless 1 < alpha < 2 and x >= 100.
AverageOrder average_order_ratio(double alpha, std::uint64_t x, Exec exec = Exec::parallel);

struct SeriesCheck {
  double partial;
  double target;
  double residual;    // |partial - target|
  double tail_bound;  // analytic bound on the omitted tail
  [[nodiscard]] bool within_bound() const { return residual <= tail_bound; }
};

/// sum_{n <= N} |mu(n)| n^-s against zeta(s)/zeta(2s); tail bound N^(1-s)/(s-1).
SeriesCheck squarefree_zeta_residual(double s, std::uint64_t N, Exec exec = Exec::parallel);

/// sum_{n <= N} 2^omega(n) n^-s against zeta(s)^2/zeta(2s). Tail bound from
/// sum_{n <= t} 2^omega(n) <= t (log t + 1) by partial summation.
SeriesCheck two_omega_residual(double s, std::uint64_t N, Exec exec = Exec::parallel);

}  // namespace bergman

#pragma once

namespace bergman {

struct ZetaEval {
  double value;
  double remainder_bound;  // magnitude of the first omitted Euler-Maclaurin term
};

/// Riemann zeta on the real axis s > 1 by Euler-Maclaurin summation with N
/// direct terms and K Bernoulli corrections. Throws std::domain_error for s <= 1.
ZetaEval zeta_euler_maclaurin(double s, int N = 20, int K = 10);
double zeta_real(double s);

/// Gamma for x > 0 (std::tgamma); throws std::domain_error otherwise.
double gamma_real(double x);
/// Euler Beta function for x, y > 0.
double beta_real(double x, double y);

}  // namespace bergman

#pragma once

// Poisson extensions of trigonometric polynomials on the polydisc and the
// diagonal and half-line measures that separate H^p- from L^p-Carleson
// behaviour in infinitely many variables.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "bergman/disc.hpp"
#include "bergman/parallel.hpp"
#include "bergman/polydisc.hpp"

namespace bergman {

/// Integer exponents of a positive rational q = prod p_j^k_j; no trailing zeros.
using SignedIndex = std::vector<std::int32_t>;

/// q_+ = prod p_j^|k_j|. Throws std::overflow_error past 2^64.
std::uint64_t q_plus(const SignedIndex& k);

/// sum_k a_k z^k on the torus, negative exponents allowed.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  /// Trailing zeros in the indices and zero coefficients are dropped.
  explicit TrigPolynomial(const std::map<SignedIndex, cplx>& coeffs);

  [[nodiscard]] const std::map<SignedIndex, cplx>& coeffs() const { return a_; }
  [[nodiscard]] std::size_t dimension() const;
  /// ||f||_{L^2(T^d)}.
  [[nodiscard]] double l2_norm() const;

 private:
  std::map<SignedIndex, cplx> a_;
};

/// Poisson extension at w: z^k -> prod_j (k_j >= 0 ? w_j^k_j : conj(w_j)^-k_j).
/// Variables past w.size() sit at 0. Throws std::domain_error if some |w_j| >= 1.
cplx poisson_extend(const TrigPolynomial& f, std::span<const cplx> w);

struct DpnormConstants {
  double p;
  double left;             // ||D f||^p_{A^p} = 2 / (2 + p) for f = (z1 + z2) / 2
  double right;            // ||f||^p_{H^p(D^2)} = 2 / (p B(p/2, 1/2))
  double right_half_beta;  // B((p + 1)/2, 1/2) / pi, the same quantity
  double left_quad;        // integral |w|^p dm by the disc quadrature
  double right_quad;       // mean of |(1 + e^{it}) / 2|^p by adaptive quadrature
  double right_quad_error;
  double beta;             // B(p/2, 1/2)
  double beta_lower;       // 2/p + 1
  [[nodiscard]] bool not_contractive() const { return left > right; }
};
/// Throws std::domain_error unless 0 < p < 2.
DpnormConstants dpnorm_constants(double p);

struct Dl2Witness {
  double closed;      // (2/3) integral_0^1 (2r + r^3)^2 r dr, as exact polynomial integral
  double quad;        // integral |P f(z, z)|^2 dm through poisson_extend
  double quad_error;
  double input_norm;  // ||f||_{L^2(T^2)}
};
/// f = (e^{it1} + e^{it2} + e^{2it1} e^{-it2}) / sqrt 3.
TrigPolynomial dl2_function();
Dl2Witness dl2_witness();

/// integral |F(z1, z1, z3, z3)|^p dm(z1) dm(z3) - ||F||^p_{H^p(D^4)}. F may use
/// at most four variables. Even p is exact; otherwise both sides use refined
/// fixed rules and error is the change under refinement.
GapResult diagonal_measure_gap(const PolydiscPolynomial& F, double p, const PolydiscQuadOptions& opt = {});

/// ||F||^p_{H^p(T^d)} for d <= 4: exact through F^(p/2) for even p, otherwise
/// the uniform torus rule doubled until two levels agree.
NormResult torus_pnorm_p(const PolydiscPolynomial& F, double p);

/// integral_0^1 f(sigma) dsigma for integrands with a layer of width eps at 0:
/// adaptive Gauss-Kronrod in t with sigma + eps = eps ((1 + eps) / eps)^t.
Integral1D integrate_boundary_layer(const std::function<double(double)>& f, double eps, double tol = 1e-12);

struct Carleson2Route {
  double embedding;  // integral_0^1 S(1 + eps + sigma)^2 dsigma
  double l2mass;
  double ratio;
};
struct Carleson2 {
  double eps;
  std::size_t d;
  std::uint64_t max_n;
  /// S = sum of 2^omega(n) n^-s over p_d-smooth n <= max_n; l2mass is the
  /// Euler product over the first d primes.
  Carleson2Route truncated;
  /// S = zeta(s)^2 / zeta(2s) and l2mass = zeta(1 + 2eps)^2 / zeta(2 + 4eps).
  Carleson2Route limit;
  double l2mass_log_tail_bound;  // 0 <= log(limit / truncated l2mass) <= this
  double sum_tail_at_zero;       // zeta^2/zeta(2s) - S at sigma = 0
  std::uint64_t smooth_count;    // number of n in the truncated sum
};
/// Throws std::domain_error unless 0.01 <= eps <= 1/2 and 1 <= d <= 1000.
Carleson2 carleson2_ratio(double eps, std::size_t d, std::uint64_t max_n = 1000000, Exec exec = Exec::parallel);

}  // namespace bergman

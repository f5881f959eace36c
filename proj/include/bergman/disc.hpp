#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bergman/quadrature.hpp"

namespace bergman {

/// Analytic polynomial sum_j a_j w^j in one variable.
class DiscPolynomial {
 public:
  DiscPolynomial() = default;
  explicit DiscPolynomial(std::vector<cplx> coeffs);
  static DiscPolynomial constant(cplx c) { return DiscPolynomial({c}); }
  static DiscPolynomial monomial(int j, cplx c = 1.0);

  [[nodiscard]] int degree() const { return static_cast<int>(a_.size()) - 1; }
  [[nodiscard]] const std::vector<cplx>& coeffs() const { return a_; }
  [[nodiscard]] cplx coeff(int j) const { return j >= 0 && j < static_cast<int>(a_.size()) ? a_[j] : cplx{}; }

  [[nodiscard]] cplx operator()(cplx w) const;
  /// f(w) and f'(w) together.
  [[nodiscard]] std::pair<cplx, cplx> value_and_derivative(cplx w) const;
  /// Roots by companion-matrix eigenvalues (empty for constants).
  [[nodiscard]] std::vector<cplx> roots() const;

  friend DiscPolynomial operator+(const DiscPolynomial& f, const DiscPolynomial& g);
  friend DiscPolynomial operator*(const DiscPolynomial& f, const DiscPolynomial& g);
  friend DiscPolynomial operator*(cplx c, const DiscPolynomial& f);
  friend bool operator==(const DiscPolynomial&, const DiscPolynomial&) = default;

 private:
  std::vector<cplx> a_{cplx{}};
};

struct SpaceParams {
  double p;
  double alpha;
};

/// (sum_j |a_j|^2 / c_alpha(j))^(1/2).
double norm_a2alpha_coeff(const DiscPolynomial& f, double alpha);

struct NormResult {
  double value = 0;
  double error = 0;  // estimated absolute error of value
  bool exact = false;
  bool insufficient_order = false;  // even p with a rule below the required exactness
  int radial_nodes = 0;
  int angular_nodes = 0;
};

/// (integral |f|^p dm_alpha)^(1/p) on a fixed rule. For even p the rule is
/// checked against the exactness the integrand needs.
NormResult norm_quad(const DiscPolynomial& f, SpaceParams sp, const DiscQuadrature& quad);
/// Same with the default rule: exact for even p, refined until converged otherwise.
NormResult norm_quad(const DiscPolynomial& f, SpaceParams sp, const QuadOptions& opt = {});

/// P_r f(w) = f(rw).
DiscPolynomial dilate(const DiscPolynomial& f, double r);

/// lhs - rhs with the combined error estimate of both sides.
struct GapResult {
  double lhs = 0;
  double rhs = 0;
  double gap = 0;
  double error = 0;
};

/// ||P_r f||_{A^q_alpha} - ||f||_{A^p_alpha}.
GapResult weissler_gap(const DiscPolynomial& f, double p, double q, double alpha, double r,
                       const QuadOptions& opt = {});

/// ||f||_{A^{p(alpha+1)/alpha}_{alpha+1}} - ||f||_{A^p_alpha}.
GapResult carleman_gap(const DiscPolynomial& f, double p, double alpha, const QuadOptions& opt = {});

/// (1 + sqrt 17) / 4, the threshold above which the Carleman extension holds.
double alpha0();

/// Taylor truncation of C (1 - conj(xi) w)^(-2 alpha/p) at degree D.
DiscPolynomial extremizer(cplx xi, cplx C, double alpha, double p, int degree);
/// Exact A^p_alpha norm |C| (1 - |xi|^2)^(-alpha/p) of the untruncated function.
double extremizer_norm(cplx xi, cplx C, double alpha, double p);
/// Squared A^2_gamma norm of the discarded tail sum_{j > D}.
double extremizer_tail_sq(cplx xi, cplx C, double alpha, double p, int degree, double gamma);

struct CarlenResult {
  double lhs = 0;  // integral of |grad_H u|^2 dmu
  double rhs = 0;  // (beta/2) integral of u^2 dmu
  double residual = 0;
  double error = 0;
  double min_modulus = 0;
};

/// Both sides of the integral identity for u = |f|^p (1-|w|^2)^beta. Throws
/// std::domain_error if f has a zero in the closed disc or min |f| < 1e-3 there.
CarlenResult carlen_identity_residual(const DiscPolynomial& f, double p, double beta, const QuadOptions& opt = {});

/// (1-|w|^2)^(-alpha/p) ||f||_{A^p_alpha} - |f(w)|.
GapResult pointwise_bound_gap(const DiscPolynomial& f, double p, double alpha, cplx w, const QuadOptions& opt = {});

struct SliceResult {
  double sphere_mean;     // Monte Carlo mean over the n-sphere
  double standard_error;
  double sphere_exact;    // closed-form sphere average
  double disc_exact;      // integral of h dm_{(n+1)/2}
  double residual;        // |sphere_mean - disc_exact|
};

/// h(w) = sum_k b_k |w|^(2k) lifted to the n-sphere by x -> h(x1 + i x2).
SliceResult sphere_slice_residual(const std::vector<double>& radial_coeffs, int n, std::uint64_t samples,
                                  std::uint64_t seed);

/// Random ensemble: degree uniform on [0, max_degree], real and imaginary
/// parts uniform on [-1, 1].
DiscPolynomial random_disc_polynomial(std::mt19937_64& rng, int max_degree);

}  // namespace bergman

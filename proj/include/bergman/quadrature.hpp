#pragma once

// Quadrature on the unit disc against dm_alpha and one-dimensional adaptive
// integration.
//
// The disc rule is a tensor product of a radial Gauss rule and the uniform
// M-point rule in the angle. The radial rule is Gauss-Jacobi either in
// t = |w|^2, where dm_alpha becomes (alpha-1)(1-t)^(alpha-2) dt and |f|^p is a
// polynomial for even p, or in r itself, which stays accurate when the ring
// means behave like powers of r near 0 (non-even p). alpha = 1 collapses the
// radial rule to the single circle r = 1.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "bergman/parallel.hpp"

namespace bergman {

using cplx = std::complex<double>;

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss rule on [-1,1] for the weight (1-x)^a (1+x)^b, a, b > -1,
/// by the Golub-Welsch eigenvalue method.
GaussRule gauss_jacobi(int n, double a, double b);

/// n-point Gauss-Legendre rule mapped to [lo, hi].
GaussRule gauss_legendre(int n, double lo = -1.0, double hi = 1.0);

/// Radial part of dm_alpha as a rule in r: sum_i weight[i] g(radius[i])
/// approximates the integral of g(|w|) dm_alpha. Weights sum to 1.
struct RadialRule {
  std::vector<double> radius;
  std::vector<double> weight;
};
enum class RadialVariable { t_squared, r };
RadialRule radial_rule(double alpha, int n, RadialVariable var = RadialVariable::t_squared);

class DiscQuadrature {
 public:
  DiscQuadrature(double alpha, int radial_nodes, int angular_nodes,
                 RadialVariable var = RadialVariable::t_squared);

  /// Node counts for integrating |f|^p with deg f <= maxdeg; exact when p is
  /// an even integer.
  static DiscQuadrature for_degree(double alpha, int maxdeg, double p);

  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] int radial_nodes() const { return static_cast<int>(radial_.radius.size()); }
  [[nodiscard]] int angular_nodes() const { return M_; }
  [[nodiscard]] const RadialRule& radial() const { return radial_; }
  [[nodiscard]] const std::vector<cplx>& roots_of_unity() const { return omega_; }
  [[nodiscard]] RadialVariable radial_variable() const { return var_; }

  /// Largest k such that |w|^(2k) is integrated exactly (0 when the rule is
  /// only asymptotically exact).
  [[nodiscard]] int radial_exactness() const {
    if (alpha_ == 1.0) return 1 << 30;
    if (var_ == RadialVariable::t_squared) return 2 * radial_nodes() - 1;
    // (1+r)^(alpha-2) is a polynomial only for integer alpha
    if (alpha_ != std::floor(alpha_)) return 0;
    return (2 * radial_nodes() - 1 - static_cast<int>(alpha_ - 2)) / 2;
  }
  /// Largest trigonometric degree integrated exactly in the angle.
  [[nodiscard]] int angular_exactness() const { return M_ - 1; }

  /// Integral of g(w) dm_alpha. Radial circles are evaluated in parallel and
  /// summed in a fixed order.
  template <class F>
  double integrate(F&& g) const {
    const std::size_t nr = radial_.radius.size();
    auto ring = parallel_map<double>(nr, [&](std::size_t i) {
      const double r = radial_.radius[i];
      double acc = 0.0;
      for (int k = 0; k < M_; ++k) acc += g(r * omega_[static_cast<std::size_t>(k)]);
      return acc / M_;
    });
    double total = 0.0;
    for (std::size_t i = 0; i < nr; ++i) total += radial_.weight[i] * ring[i];
    return total;
  }

  /// Same integral with the ring average supplied by the caller:
  /// ring(r, omega) returns the mean over the M angular nodes at radius r.
  template <class Ring>
  double integrate_rings(Ring&& ring) const {
    const std::size_t nr = radial_.radius.size();
    auto vals = parallel_map<double>(nr, [&](std::size_t i) { return ring(radial_.radius[i], omega_); });
    double total = 0.0;
    for (std::size_t i = 0; i < nr; ++i) total += radial_.weight[i] * vals[i];
    return total;
  }

 private:
  double alpha_;
  int M_;
  RadialVariable var_;
  RadialRule radial_;
  std::vector<cplx> omega_;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_radial = 384;
  int max_angular = 2048;
};

struct QuadValue {
  double value = 0;
  double error = 0;  // difference between the last two refinement levels (0 if exact)
  int radial_nodes = 0;
  int angular_nodes = 0;
  bool exact = false;
  bool converged = true;
};

/// Refines a disc rule by doubling both node counts until two successive
/// values agree within the tolerance. eval(rule) returns the integral on a rule.
QuadValue integrate_adaptive(double alpha, int radial0, int angular0,
                             const std::function<double(const DiscQuadrature&)>& eval, const QuadOptions& opt = {},
                             RadialVariable var = RadialVariable::r);

struct Integral1D {
  double value;
  double error;
};

/// Adaptive Gauss-Kronrod on a finite interval.
Integral1D integrate_interval(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);
/// Adaptive exp-sinh on [a, infinity).
Integral1D integrate_half_line(const std::function<double(double)>& f, double a, double tol = 1e-12);

}  // namespace bergman

#include "bergman/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <stdexcept>

namespace bergman {

GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be positive");
  if (!(a > -1.0) || !(b > -1.0)) throw std::domain_error("gauss_jacobi: requires a, b > -1");
  const double ab = a + b;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(beta);
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                              std::lgamma(ab + 2.0));
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  for (int i = 0; i < n; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

GaussRule gauss_legendre(int n, double lo, double hi) {
  GaussRule r = gauss_jacobi(n, 0.0, 0.0);
  const double h = 0.5 * (hi - lo);
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    r.nodes[i] = lo + h * (r.nodes[i] + 1.0);
    r.weights[i] *= h;
  }
  return r;
}

RadialRule radial_rule(double alpha, int n, RadialVariable var) {
  if (!(alpha >= 1.0)) throw std::domain_error("radial_rule: alpha must be >= 1");
  RadialRule rr;
  if (alpha == 1.0) {
    rr.radius = {1.0};
    rr.weight = {1.0};
    return rr;
  }
  const double a = alpha - 2.0;
  if (var == RadialVariable::r) {
    // 2(alpha-1) r (1-r)^a (1+r)^a dr with r = (1+x)/2: Jacobi weight (1-x)^a (1+x)
    GaussRule g = gauss_jacobi(n, a, 1.0);
    const double scale = (alpha - 1.0) / std::pow(2.0, a + 1.0);
    rr.radius.resize(g.nodes.size());
    rr.weight.resize(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const double r = 0.5 * (1.0 + g.nodes[i]);
      rr.radius[i] = r;
      rr.weight[i] = scale * g.weights[i] * std::pow(1.0 + r, a);
    }
    return rr;
  }
  GaussRule g = gauss_jacobi(n, a, 0.0);
  const double scale = (alpha - 1.0) / std::pow(2.0, a + 1.0);
  rr.radius.resize(g.nodes.size());
  rr.weight.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    rr.radius[i] = std::sqrt(0.5 * (1.0 + g.nodes[i]));
    rr.weight[i] = scale * g.weights[i];
  }
  return rr;
}

DiscQuadrature::DiscQuadrature(double alpha, int radial_nodes, int angular_nodes, RadialVariable var)
    : alpha_(alpha), M_(angular_nodes), var_(var), radial_(radial_rule(alpha, radial_nodes, var)) {
  if (angular_nodes < 1) throw std::invalid_argument("DiscQuadrature: angular node count must be positive");
  omega_.resize(static_cast<std::size_t>(M_));
  for (int k = 0; k < M_; ++k) omega_[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / M_);
}

DiscQuadrature DiscQuadrature::for_degree(double alpha, int maxdeg, double p) {
  const int half = static_cast<int>(std::ceil(p / 2.0));
  const int radial = static_cast<int>(std::ceil(maxdeg * p / 2.0)) + 8;
  const int angular = std::max(4 * maxdeg + 8, half * maxdeg + 1);
  return DiscQuadrature(alpha, radial, angular);
}

QuadValue integrate_adaptive(double alpha, int radial0, int angular0,
                             const std::function<double(const DiscQuadrature&)>& eval, const QuadOptions& opt,
                             RadialVariable var) {
  int nr = std::max(radial0, 1);
  int M = std::max(angular0, 1);
  double prev = eval(DiscQuadrature(alpha, nr, M, var));
  QuadValue out;
  for (;;) {
    const int nr2 = alpha == 1.0 ? nr : std::min(2 * nr, opt.max_radial);
    const int M2 = std::min(2 * M, opt.max_angular);
    if (nr2 == nr && M2 == M) {
      out.converged = false;
      break;
    }
    const double cur = eval(DiscQuadrature(alpha, nr2, M2, var));
    const double diff = std::abs(cur - prev);
    nr = nr2;
    M = M2;
    out.error = diff;
    prev = cur;
    if (diff <= opt.abs_tol + opt.rel_tol * std::abs(cur)) break;
  }
  out.value = prev;
  out.radial_nodes = nr;
  out.angular_nodes = M;
  return out;
}

Integral1D integrate_interval(const std::function<double(double)>& f, double a, double b, double tol) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 25, tol, &err);
  return {v, err};
}

Integral1D integrate_half_line(const std::function<double(double)>& f, double a, double tol) {
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0.0;
  const double v = integrator.integrate([&](double u) { return f(a + u); }, tol, &err);
  return {v, err};
}

}  // namespace bergman

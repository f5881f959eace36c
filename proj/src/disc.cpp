#include "bergman/disc.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bergman/arith.hpp"
#include "abs_pow.hpp"

namespace bergman {
namespace {

// Mean of |f(r w_k)|^p over the angular nodes.
double ring_mean(const std::vector<cplx>& a, double r, const std::vector<cplx>& omega, double p) {
  std::vector<cplx> b(a.size());
  double rj = 1.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    b[j] = a[j] * rj;
    rj *= r;
  }
  double acc = 0.0;
  for (const cplx& z : omega) {
    cplx v = b.back();
    for (std::size_t j = b.size() - 1; j-- > 0;) v = v * z + b[j];
    acc += abs_pow(v, p);
  }
  return acc / static_cast<double>(omega.size());
}

bool is_even_integer(double p) { return p > 0 && std::floor(p / 2.0) * 2.0 == p; }

double integral_on(const DiscPolynomial& f, double p, const DiscQuadrature& q) {
  return q.integrate_rings([&](double r, const std::vector<cplx>& om) { return ring_mean(f.coeffs(), r, om, p); });
}

// integrate() is non-const, so each thread keeps its own abscissa tables
boost::math::quadrature::tanh_sinh<double>& tanh_sinh_rule() {
  thread_local boost::math::quadrature::tanh_sinh<double> rule(12);
  return rule;
}

struct RingValue {
  double mean;
  double error;
};

// Mean of |f(r e^{i theta})|^p. A zero z of f puts a singularity of the
// angular integrand at distance |log(|z|/r)| from the real theta axis. When
// all zeros are far, the uniform rule converges geometrically and is doubled
// (reusing nodes) until two levels agree within tol. Otherwise the period is
// cut at the arguments of the nearby zeros and each arc goes to tanh-sinh,
// which clusters nodes at the cuts.
RingValue ring_adaptive(const std::vector<cplx>& a, const std::vector<cplx>& zeros, double r, double p, int M0,
                        int Mmax, double tol) {
  double dmin = std::numeric_limits<double>::infinity();
  for (const cplx& z : zeros) dmin = std::min(dmin, std::abs(std::log(std::abs(z) / r)));
  std::vector<cplx> b(a.size());
  double rj = 1.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    b[j] = a[j] * rj;
    rj *= r;
  }
  // real arithmetic skips the inf/nan recovery of std::complex multiplication
  auto horner = [](const std::vector<cplx>& c, cplx z) {
    const double zr = z.real(), zi = z.imag();
    double vr = c.back().real(), vi = c.back().imag();
    for (std::size_t j = c.size() - 1; j-- > 0;) {
      const double t = vr * zr - vi * zi + c[j].real();
      vi = vr * zi + vi * zr + c[j].imag();
      vr = t;
    }
    return cplx(vr, vi);
  };
  const double two_pi = 2.0 * std::numbers::pi;
  if (dmin >= 0.05) {
    // nodes by rotation; the drift after M steps is O(M eps)
    auto sweep = [&](int M, double offset) {
      const cplx step = std::polar(1.0, two_pi / M);
      cplx z = std::polar(1.0, offset * two_pi / M);
      double acc = 0.0;
      for (int k = 0; k < M; ++k) {
        acc += abs_pow(horner(b, z), p);
        z *= step;
      }
      return acc;
    };
    int M = M0;
    double sum = sweep(M, 0.0);
    double mean = sum / M;
    double diff = 0.0;
    while (M < Mmax) {
      sum += sweep(M, 0.5);
      M *= 2;
      const double next = sum / M;
      diff = std::abs(next - mean);
      mean = next;
      if (diff <= tol) return {mean, diff};
    }
    return {mean, diff};
  }
  std::vector<double> cuts;
  for (const cplx& z : zeros)
    if (std::abs(std::log(std::abs(z) / r)) < 0.5) cuts.push_back(std::arg(z));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(cuts.front() + two_pi);
  // arcs of length < 2 pi keep tan(phi / 4) finite
  if (cuts.size() == 2) cuts.insert(cuts.begin() + 1, cuts.front() + std::numbers::pi);
  auto& ts = tanh_sinh_rule();
  std::vector<cplx> rot(b.size());
  double total = 0.0, err = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double len = cuts[k + 1] - cuts[k];
    if (len < 1e-14) continue;
    // theta = c + phi with t = tan(phi / 4): e^{i phi} = ((1 + i t) / (1 - i t))^2, dphi = 4 dt / (1 + t^2)
    const cplx shift = std::polar(1.0, cuts[k]);
    cplx sj = 1.0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      rot[j] = b[j] * sj;
      sj *= shift;
    }
    auto g = [&](double t) {
      const double s = 1.0 + t * t;
      const cplx half((1.0 - t * t) / s, 2.0 * t / s);
      return abs_pow(horner(rot, half * half), p) * 4.0 / s;
    };
    double e = 0.0;
    total += ts.integrate(g, 0.0, std::tan(0.25 * len), 0.1 * tol, &e);
    err += e;
  }
  return {total / two_pi, err / two_pi};
}

// Integral of |f|^p dm_alpha for non-even p. The ring means are smooth in r
// except at the moduli of the zeros of f, so [0, 1] is split there and each
// piece is integrated by tanh-sinh, whose endpoint clustering also absorbs the
// weight (1 - r)^(alpha-2) at r = 1.
QuadValue integrate_abs_pow(const DiscPolynomial& f, double p, double alpha, const QuadOptions& opt) {
  const int D = std::max(f.degree(), 1);
  const int M0 = std::max(4 * D + 8, 16);
  const double tol = opt.abs_tol;
  const auto& a = f.coeffs();
  const auto zeros = f.roots();
  QuadValue out;
  if (alpha == 1.0) {
    auto rv = ring_adaptive(a, zeros, 1.0, p, M0, opt.max_angular * 32, 0.1 * tol);
    out.value = rv.mean;
    out.error = rv.error;
    out.radial_nodes = 1;
    out.converged = rv.error <= 0.1 * tol;
    return out;
  }
  std::vector<double> breaks{0.0};
  for (const cplx& z : zeros) {
    const double m = std::abs(z);
    if (m > 1e-9 && m < 1.0 - 1e-9) breaks.push_back(m);
  }
  breaks.push_back(1.0);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(), [](double x, double y) { return y - x < 1e-9; }), breaks.end());
  if (breaks.back() < 1.0) breaks.back() = 1.0;

  const double ax = alpha - 2.0;
  double ring_rel = 0.0;
  int rings = 0;
  // xc is the signed distance to the nearer endpoint, so 1 - r stays accurate near r = 1
  auto integrand = [&](double hi, double r, double xc) {
    const double one_minus_r = (hi == 1.0 && xc > 0) ? xc : 1.0 - r;
    if (one_minus_r <= 0.0) return 0.0;
    const double w = 2 * (alpha - 1) * r * std::pow(one_minus_r * (1 + r), ax);
    auto rv = ring_adaptive(a, zeros, r, p, M0, opt.max_angular, 0.1 * tol);
    if (rv.mean > 0) ring_rel = std::max(ring_rel, rv.error / rv.mean);
    ++rings;
    return w * rv.mean;
  };
  auto& ts = tanh_sinh_rule();
  double total = 0.0, err = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double lo = breaks[k], hi = breaks[k + 1];
    double e = 0.0;
    total += ts.integrate([&](double r, double xc) { return integrand(hi, r, xc); }, lo, hi, tol, &e);
    err += e;
  }
  out.value = total;
  out.error = err + ring_rel * std::abs(total);
  out.converged = out.error <= tol + opt.rel_tol * std::abs(total);
  out.radial_nodes = rings;
  return out;
}

NormResult to_norm(double integral, double integral_err, double p) {
  NormResult n;
  n.value = std::pow(std::max(integral, 0.0), 1.0 / p);
  n.error = integral > 0 ? n.value * integral_err / (p * integral) : integral_err;
  return n;
}

}  // namespace

DiscPolynomial::DiscPolynomial(std::vector<cplx> coeffs) : a_(std::move(coeffs)) {
  while (a_.size() > 1 && a_.back() == cplx{}) a_.pop_back();
  if (a_.empty()) a_.push_back(cplx{});
}

DiscPolynomial DiscPolynomial::monomial(int j, cplx c) {
  std::vector<cplx> a(static_cast<std::size_t>(j) + 1, cplx{});
  a.back() = c;
  return DiscPolynomial(std::move(a));
}

cplx DiscPolynomial::operator()(cplx w) const {
  cplx v = a_.back();
  for (std::size_t j = a_.size() - 1; j-- > 0;) v = v * w + a_[j];
  return v;
}

std::pair<cplx, cplx> DiscPolynomial::value_and_derivative(cplx w) const {
  cplx v = a_.back();
  cplx d = 0.0;
  for (std::size_t j = a_.size() - 1; j-- > 0;) {
    d = d * w + v;
    v = v * w + a_[j];
  }
  return {v, d};
}

std::vector<cplx> DiscPolynomial::roots() const {
  const int D = degree();
  if (D < 1) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(D, D);
  for (int i = 1; i < D; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < D; ++i) companion(i, D - 1) = -a_[static_cast<std::size_t>(i)] / a_.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  std::vector<cplx> out(static_cast<std::size_t>(D));
  for (int i = 0; i < D; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return out;
}

DiscPolynomial operator+(const DiscPolynomial& f, const DiscPolynomial& g) {
  std::vector<cplx> c(std::max(f.a_.size(), g.a_.size()), cplx{});
  for (std::size_t j = 0; j < f.a_.size(); ++j) c[j] += f.a_[j];
  for (std::size_t j = 0; j < g.a_.size(); ++j) c[j] += g.a_[j];
  return DiscPolynomial(std::move(c));
}

DiscPolynomial operator*(const DiscPolynomial& f, const DiscPolynomial& g) {
  std::vector<cplx> c(f.a_.size() + g.a_.size() - 1, cplx{});
  for (std::size_t i = 0; i < f.a_.size(); ++i)
    for (std::size_t j = 0; j < g.a_.size(); ++j) c[i + j] += f.a_[i] * g.a_[j];
  return DiscPolynomial(std::move(c));
}

DiscPolynomial operator*(cplx s, const DiscPolynomial& f) {
  std::vector<cplx> c = f.a_;
  for (auto& v : c) v *= s;
  return DiscPolynomial(std::move(c));
}

double norm_a2alpha_coeff(const DiscPolynomial& f, double alpha) {
  double s = 0.0;
  double c = 1.0;  // c_alpha(j), built incrementally
  for (int j = 0; j <= f.degree(); ++j) {
    if (j > 0) c *= (alpha + j - 1.0) / j;
    s += std::norm(f.coeff(j)) / c;
  }
  return std::sqrt(s);
}

NormResult norm_quad(const DiscPolynomial& f, SpaceParams sp, const DiscQuadrature& quad) {
  if (!(sp.p > 0)) throw std::domain_error("norm_quad: p must be positive");
  if (std::abs(quad.alpha() - sp.alpha) > 0) throw std::invalid_argument("norm_quad: rule built for another alpha");
  const double I = integral_on(f, sp.p, quad);
  NormResult n = to_norm(I, 0.0, sp.p);
  n.radial_nodes = quad.radial_nodes();
  n.angular_nodes = quad.angular_nodes();
  if (is_even_integer(sp.p)) {
    const int need = static_cast<int>(sp.p / 2) * f.degree();
    n.insufficient_order = quad.angular_exactness() < need || quad.radial_exactness() < need;
    n.exact = !n.insufficient_order;
  }
  return n;
}

NormResult norm_quad(const DiscPolynomial& f, SpaceParams sp, const QuadOptions& opt) {
  if (!(sp.p > 0)) throw std::domain_error("norm_quad: p must be positive");
  if (!(sp.alpha >= 1)) throw std::domain_error("norm_quad: alpha must be >= 1");
  const int D = std::max(f.degree(), 1);
  auto start = DiscQuadrature::for_degree(sp.alpha, D, sp.p);
  if (is_even_integer(sp.p) || f.degree() == 0) {
    NormResult n = norm_quad(f, sp, start);
    n.exact = true;
    return n;
  }
  auto qv = integrate_abs_pow(f, sp.p, sp.alpha, opt);
  NormResult n = to_norm(qv.value, qv.error, sp.p);
  n.radial_nodes = qv.radial_nodes;
  n.angular_nodes = qv.angular_nodes;
  return n;
}

DiscPolynomial dilate(const DiscPolynomial& f, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("dilate: r must lie in [0,1]");
  std::vector<cplx> c = f.coeffs();
  double rj = 1.0;
  for (auto& v : c) {
    v *= rj;
    rj *= r;
  }
  return DiscPolynomial(std::move(c));
}

GapResult weissler_gap(const DiscPolynomial& f, double p, double q, double alpha, double r, const QuadOptions& opt) {
  if (!(p > 0 && p <= q)) throw std::domain_error("weissler_gap: requires 0 < p <= q");
  auto lhs = norm_quad(dilate(f, r), {q, alpha}, opt);
  auto rhs = norm_quad(f, {p, alpha}, opt);
  return {lhs.value, rhs.value, lhs.value - rhs.value, lhs.error + rhs.error};
}

GapResult carleman_gap(const DiscPolynomial& f, double p, double alpha, const QuadOptions& opt) {
  if (!(p > 0) || !(alpha >= 1)) throw std::domain_error("carleman_gap: requires p > 0, alpha >= 1");
  auto lhs = norm_quad(f, {p * (alpha + 1) / alpha, alpha + 1}, opt);
  auto rhs = norm_quad(f, {p, alpha}, opt);
  return {lhs.value, rhs.value, lhs.value - rhs.value, lhs.error + rhs.error};
}

double alpha0() { return (1.0 + std::sqrt(17.0)) / 4.0; }

DiscPolynomial extremizer(cplx xi, cplx C, double alpha, double p, int degree) {
  if (!(std::abs(xi) < 1.0)) throw std::domain_error("extremizer: requires |xi| < 1");
  const double g = 2 * alpha / p;
  std::vector<cplx> a(static_cast<std::size_t>(degree) + 1);
  cplx pw = 1.0;
  double c = 1.0;
  for (int j = 0; j <= degree; ++j) {
    if (j > 0) c *= (g + j - 1.0) / j;
    a[static_cast<std::size_t>(j)] = C * c * pw;
    pw *= std::conj(xi);
  }
  return DiscPolynomial(std::move(a));
}

double extremizer_norm(cplx xi, cplx C, double alpha, double p) {
  return std::abs(C) * std::pow(1.0 - std::norm(xi), -alpha / p);
}

double extremizer_tail_sq(cplx xi, cplx C, double alpha, double p, int degree, double gamma) {
  const double g = 2 * alpha / p;
  const double x = std::norm(xi);
  if (x == 0.0) return 0.0;
  double cg = 1.0, cgam = 1.0, xp = 1.0, tail = 0.0;
  for (int j = 1; j < degree + 100000; ++j) {
    cg *= (g + j - 1.0) / j;
    cgam *= (gamma + j - 1.0) / j;
    xp *= x;
    if (j <= degree) continue;
    const double term = cg * cg * xp / cgam;
    tail += term;
    if (term < 1e-18 * tail || xp == 0.0) break;
  }
  return std::norm(C) * tail;
}

CarlenResult carlen_identity_residual(const DiscPolynomial& f, double p, double beta, const QuadOptions& opt) {
  if (!(p > 0) || !(beta > 0.5)) throw std::domain_error("carlen_identity_residual: requires p > 0, beta > 1/2");
  for (const cplx& z : f.roots())
    if (std::abs(z) <= 1.0) throw std::domain_error("carlen_identity_residual: f vanishes in the closed disc");
  const int samples = 4096 + 64 * f.degree();
  double min_mod = std::abs(f(1.0));
  for (int k = 0; k < samples; ++k)
    min_mod = std::min(min_mod, std::abs(f(std::polar(1.0, 2 * std::numbers::pi * k / samples))));
  if (min_mod < 1e-3) throw std::domain_error("carlen_identity_residual: min |f| on the circle below 1e-3");

  const double a = 2 * beta;  // (1-|w|^2)^(2 beta - 2) dm = dm_{2 beta} / (2 beta - 1)
  auto lhs_integrand = [&](cplx w) {
    auto [v, d] = f.value_and_derivative(w);
    const double m = std::abs(v);
    const double s = 1.0 - std::norm(w);
    const cplx du = 0.5 * p * std::pow(m, p - 2) * v * std::conj(d) * s - beta * w * std::pow(m, p);
    return std::norm(du);
  };
  auto rhs_integrand = [&](cplx w) { return std::pow(std::abs(f(w)), 2 * p); };
  const int D = std::max(f.degree(), 1);
  auto start = DiscQuadrature::for_degree(a, D + 1, 2 * p + 2);
  auto L = integrate_adaptive(
      a, start.radial_nodes(), start.angular_nodes(),
      [&](const DiscQuadrature& q) { return q.integrate(lhs_integrand); }, opt);
  auto R = integrate_adaptive(
      a, start.radial_nodes(), start.angular_nodes(),
      [&](const DiscQuadrature& q) { return q.integrate(rhs_integrand); }, opt);
  CarlenResult out;
  out.lhs = L.value / (a - 1);
  out.rhs = 0.5 * beta * R.value / (a - 1);
  out.residual = std::abs(out.lhs - out.rhs);
  out.error = (L.error + 0.5 * beta * R.error) / (a - 1);
  out.min_modulus = min_mod;
  return out;
}

GapResult pointwise_bound_gap(const DiscPolynomial& f, double p, double alpha, cplx w, const QuadOptions& opt) {
  if (!(std::abs(w) < 1.0)) throw std::domain_error("pointwise_bound_gap: requires |w| < 1");
  auto n = norm_quad(f, {p, alpha}, opt);
  const double scale = std::pow(1.0 - std::norm(w), -alpha / p);
  GapResult g;
  g.lhs = scale * n.value;
  g.rhs = std::abs(f(w));
  g.gap = g.lhs - g.rhs;
  g.error = scale * n.error;
  return g;
}

SliceResult sphere_slice_residual(const std::vector<double>& b, int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1) throw std::domain_error("sphere_slice_residual: n must be >= 1");
  if (samples < 2) throw std::domain_error("sphere_slice_residual: need at least two samples");
  const double alpha = (n + 1) / 2.0;
  auto h = [&](double t) {
    double v = 0.0;
    for (std::size_t k = b.size(); k-- > 0;) v = v * t + b[k];
    return v;
  };
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  double mean = 0.0, m2 = 0.0;
  std::vector<double> x(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t i = 1; i <= samples; ++i) {
    double s = 0.0;
    for (auto& xi : x) {
      xi = gauss(rng);
      s += xi * xi;
    }
    const double v = h((x[0] * x[0] + x[1] * x[1]) / s);
    const double delta = v - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (v - mean);
  }
  SliceResult out{};
  out.sphere_mean = mean;
  out.standard_error = std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples));
  // x1^2 + x2^2 on the n-sphere is Beta(1, (n-1)/2): E[T^k] = k! / ((n+1)/2)_k
  double moment = 1.0;
  out.sphere_exact = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k > 0) moment *= static_cast<double>(k) / (alpha + static_cast<double>(k) - 1.0);
    out.sphere_exact += b[k] * moment;
  }
  // disc side by the exact radial rule for dm_alpha
  auto rr = radial_rule(alpha, static_cast<int>(b.size()) + 1);
  out.disc_exact = 0.0;
  for (std::size_t i = 0; i < rr.radius.size(); ++i) out.disc_exact += rr.weight[i] * h(rr.radius[i] * rr.radius[i]);
  out.residual = std::abs(out.sphere_mean - out.disc_exact);
  return out;
}

DiscPolynomial random_disc_polynomial(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int D = deg(rng);
  std::vector<cplx> a(static_cast<std::size_t>(D) + 1);
  for (auto& v : a) {
    const double re = u(rng);
    const double im = u(rng);
    v = {re, im};
  }
  return DiscPolynomial(std::move(a));
}

}  // namespace bergman

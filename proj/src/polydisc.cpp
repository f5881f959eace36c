#include "bergman/polydisc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "abs_pow.hpp"
#include "bergman/parallel.hpp"
#include "bergman/special.hpp"

namespace bergman {

DirichletPolynomial::DirichletPolynomial(std::map<std::uint64_t, cplx> coeffs) {
  for (const auto& [n, c] : coeffs) {
    if (n == 0) throw std::domain_error("DirichletPolynomial: index n must be positive");
    if (c != cplx{}) a_.emplace(n, c);
  }
}

cplx DirichletPolynomial::coeff(std::uint64_t n) const {
  auto it = a_.find(n);
  return it == a_.end() ? cplx{} : it->second;
}

cplx DirichletPolynomial::operator()(cplx s) const {
  cplx v = 0.0;
  for (const auto& [n, c] : a_) v += c * std::exp(-s * std::log(static_cast<double>(n)));
  return v;
}

DirichletPolynomial operator+(const DirichletPolynomial& f, const DirichletPolynomial& g) {
  auto c = f.a_;
  for (const auto& [n, v] : g.a_) c[n] += v;
  return DirichletPolynomial(std::move(c));
}

DirichletPolynomial operator*(const DirichletPolynomial& f, const DirichletPolynomial& g) {
  std::map<std::uint64_t, cplx> c;
  for (const auto& [m, u] : f.a_)
    for (const auto& [n, v] : g.a_) {
      std::uint64_t l = 0;
      if (__builtin_mul_overflow(m, n, &l)) throw std::overflow_error("DirichletPolynomial: index overflow");
      c[l] += u * v;
    }
  return DirichletPolynomial(std::move(c));
}

DirichletPolynomial operator*(cplx c, const DirichletPolynomial& f) {
  auto a = f.a_;
  for (auto& [n, v] : a) v *= c;
  return DirichletPolynomial(std::move(a));
}

void write_csv(std::ostream& os, const DirichletPolynomial& f) {
  os << "n,re,im\n";
  char buf[96];
  for (const auto& [n, c] : f.coeffs()) {
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g\n", c.real(), c.imag());
    os << n << buf;
  }
}

DirichletPolynomial read_dirichlet_csv(std::istream& is) {
  std::map<std::uint64_t, cplx> c;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("n,", 0) == 0) continue;
    std::istringstream row(line);
    std::string fn, fre, fim, extra;
    if (!std::getline(row, fn, ',') || !std::getline(row, fre, ',') || !std::getline(row, fim, ',') ||
        std::getline(row, extra, ','))
      throw std::invalid_argument("read_dirichlet_csv: expected 3 fields on line " + std::to_string(lineno));
    try {
      std::size_t pos = 0;
      const auto n = std::stoull(fn, &pos);
      if (pos != fn.size() || n == 0) throw std::invalid_argument("n");
      c[n] += cplx(std::stod(fre), std::stod(fim));
    } catch (const std::exception&) {
      throw std::invalid_argument("read_dirichlet_csv: malformed line " + std::to_string(lineno));
    }
  }
  return DirichletPolynomial(std::move(c));
}

PolydiscPolynomial::PolydiscPolynomial(std::map<MultiIndex, cplx> coeffs) {
  for (auto& [k, c] : coeffs)
    if (c != cplx{}) a_.emplace(k, c);
}

cplx PolydiscPolynomial::coeff(const MultiIndex& k) const {
  auto it = a_.find(k);
  return it == a_.end() ? cplx{} : it->second;
}

std::size_t PolydiscPolynomial::dimension() const {
  std::size_t d = 0;
  for (const auto& [k, c] : a_) d = std::max(d, k.dimension());
  return d;
}

std::uint32_t PolydiscPolynomial::degree_in(std::size_t j) const {
  std::uint32_t m = 0;
  for (const auto& [k, c] : a_) m = std::max(m, k[j]);
  return m;
}

cplx PolydiscPolynomial::operator()(std::span<const cplx> z) const {
  cplx v = 0.0;
  for (const auto& [k, c] : a_) {
    if (k.dimension() > z.size()) throw std::invalid_argument("PolydiscPolynomial: too few coordinates");
    cplx t = c;
    for (std::size_t j = 0; j < k.dimension(); ++j) t *= std::pow(z[j], static_cast<int>(k[j]));
    v += t;
  }
  return v;
}

PolydiscPolynomial operator+(const PolydiscPolynomial& f, const PolydiscPolynomial& g) {
  auto c = f.a_;
  for (const auto& [k, v] : g.a_) c[k] += v;
  return PolydiscPolynomial(std::move(c));
}

PolydiscPolynomial operator*(const PolydiscPolynomial& f, const PolydiscPolynomial& g) {
  std::map<MultiIndex, cplx> c;
  for (const auto& [k, u] : f.a_)
    for (const auto& [l, v] : g.a_) c[k + l] += u * v;
  return PolydiscPolynomial(std::move(c));
}

PolydiscPolynomial bohr_lift(const DirichletPolynomial& f) {
  std::map<MultiIndex, cplx> c;
  for (const auto& [n, a] : f.coeffs()) c.emplace(factorize(n), a);
  return PolydiscPolynomial(std::move(c));
}

DirichletPolynomial bohr_unlift(const PolydiscPolynomial& F) {
  std::map<std::uint64_t, cplx> c;
  for (const auto& [k, a] : F.coeffs()) c.emplace(index_to_integer(k), a);
  return DirichletPolynomial(std::move(c));
}

double norm_a2alpha(const DirichletPolynomial& f, double alpha) {
  double s = 0.0;
  for (const auto& [n, a] : f.coeffs()) s += std::norm(a) / divisor_fn(alpha, n);
  return std::sqrt(s);
}

double norm_a2alpha(const PolydiscPolynomial& F, double alpha) {
  double s = 0.0;
  for (const auto& [k, a] : F.coeffs()) s += std::norm(a) / divisor_fn(alpha, k);
  return std::sqrt(s);
}

PolydiscPolynomial dilate(const PolydiscPolynomial& F, std::span<const double> r) {
  std::map<MultiIndex, cplx> c;
  for (const auto& [k, a] : F.coeffs()) {
    cplx v = a;
    for (std::size_t j = 0; j < std::min(k.dimension(), r.size()); ++j) v *= std::pow(r[j], static_cast<int>(k[j]));
    c.emplace(k, v);
  }
  return PolydiscPolynomial(std::move(c));
}

DirichletPolynomial translate(const DirichletPolynomial& f, double eps) {
  std::map<std::uint64_t, cplx> c;
  for (const auto& [n, a] : f.coeffs()) c.emplace(n, a * std::exp(-eps * std::log(static_cast<double>(n))));
  return DirichletPolynomial(std::move(c));
}

namespace {

struct VarNodes {
  std::vector<cplx> z;
  std::vector<double> w;
};

VarNodes nodes_of(const DiscQuadrature& q) {
  VarNodes v;
  const auto& rr = q.radial();
  const auto& om = q.roots_of_unity();
  const double M = static_cast<double>(om.size());
  for (std::size_t i = 0; i < rr.radius.size(); ++i)
    for (const cplx& o : om) {
      v.z.push_back(rr.radius[i] * o);
      v.w.push_back(rr.weight[i] / M);
    }
  return v;
}

// Integral of |F|^p against the tensor rule. The coefficients are held in a
// dense array whose last variable varies fastest; each level contracts one
// variable at a node and recurses on the remaining ones.
class TensorIntegral {
 public:
  TensorIntegral(const PolydiscPolynomial& F, std::size_t d, double p) : d_(d), p_(p), ext_(d), stride_(d) {
    std::size_t size = 1;
    for (std::size_t j = d; j-- > 0;) {
      ext_[j] = F.degree_in(j) + 1;
      stride_[j] = size;
      size *= ext_[j];
    }
    dense_.assign(size, cplx{});
    for (const auto& [k, a] : F.coeffs()) {
      std::size_t at = 0;
      for (std::size_t j = 0; j < d; ++j) at += k[j] * stride_[j];
      dense_[at] = a;
    }
  }

  double integrate(const std::vector<VarNodes>& nodes) const {
    if (d_ == 0) return abs_pow(dense_[0], p_);
    const auto& outer = nodes[0];
    auto vals = parallel_map<double>(outer.z.size(), [&](std::size_t i) {
      return outer.w[i] * level(1, contract(dense_, 0, outer.z[i]), nodes);
    });
    double total = 0.0;
    for (double v : vals) total += v;
    return total;
  }

 private:
  // sum_k c[k * stride + rest] z^k over variable j
  std::vector<cplx> contract(const std::vector<cplx>& c, std::size_t j, cplx z) const {
    const std::size_t inner = stride_[j];
    std::vector<cplx> out(inner, cplx{});
    for (std::size_t k = ext_[j]; k-- > 0;)
      for (std::size_t r = 0; r < inner; ++r) out[r] = out[r] * z + c[k * inner + r];
    return out;
  }

  double level(std::size_t j, const std::vector<cplx>& c, const std::vector<VarNodes>& nodes) const {
    if (j == d_) return abs_pow(c[0], p_);
    const auto& nv = nodes[j];
    double acc = 0.0;
    if (j + 1 == d_) {
      for (std::size_t i = 0; i < nv.z.size(); ++i) {
        cplx v = c.back();
        for (std::size_t k = c.size() - 1; k-- > 0;) v = v * nv.z[i] + c[k];
        acc += nv.w[i] * abs_pow(v, p_);
      }
      return acc;
    }
    for (std::size_t i = 0; i < nv.z.size(); ++i) acc += nv.w[i] * level(j + 1, contract(c, j, nv.z[i]), nodes);
    return acc;
  }

  std::size_t d_;
  double p_;
  std::vector<std::size_t> ext_, stride_;
  std::vector<cplx> dense_;
};

bool is_even_integer(double p) { return p > 0 && std::floor(p / 2.0) * 2.0 == p; }

NormResult norm_from_integral(double integral, double err, double p) {
  NormResult n;
  n.value = std::pow(std::max(integral, 0.0), 1.0 / p);
  n.error = integral > 0 ? n.value * err / (p * integral) : err;
  return n;
}

void check_dimension(std::size_t d) {
  if (d > kMaxQuadDimension)
    throw std::domain_error("polydisc_norm_quad: " + std::to_string(d) + " variables exceed the tensor limit of " +
                            std::to_string(kMaxQuadDimension));
}

constexpr std::size_t kDirichletPrimes = 3;

void check_support(const DirichletPolynomial& f, const char* who) {
  if (!supported_on_first_primes(f, kDirichletPrimes))
    throw std::domain_error(std::string(who) + ": support must factor over the primes 2, 3, 5");
}

}  // namespace

NormResult polydisc_norm_quad(const PolydiscPolynomial& F, double p, double alpha,
                              const std::vector<DiscQuadrature>& rules) {
  if (!(p > 0)) throw std::domain_error("polydisc_norm_quad: p must be positive");
  const std::size_t d = F.dimension();
  check_dimension(d);
  if (rules.size() < d) throw std::domain_error("polydisc_norm_quad: one rule per variable is required");
  std::vector<VarNodes> nodes;
  NormResult out;
  for (std::size_t j = 0; j < d; ++j) {
    if (rules[j].alpha() != alpha) throw std::domain_error("polydisc_norm_quad: rule weight does not match alpha");
    nodes.push_back(nodes_of(rules[j]));
    if (is_even_integer(p)) {
      const int need = static_cast<int>(p / 2) * static_cast<int>(F.degree_in(j));
      if (rules[j].radial_exactness() < need || rules[j].angular_exactness() < need) out.insufficient_order = true;
    }
  }
  const double integral = TensorIntegral(F, d, p).integrate(nodes);
  NormResult n = norm_from_integral(integral, 0.0, p);
  n.exact = is_even_integer(p) && !out.insufficient_order;
  n.insufficient_order = out.insufficient_order;
  n.radial_nodes = d ? rules[0].radial_nodes() : 0;
  n.angular_nodes = d ? rules[0].angular_nodes() : 0;
  return n;
}

NormResult polydisc_norm_quad(const PolydiscPolynomial& F, double p, double alpha, const PolydiscQuadOptions& opt) {
  if (!(p > 0)) throw std::domain_error("polydisc_norm_quad: p must be positive");
  const std::size_t d = F.dimension();
  check_dimension(d);
  if (is_even_integer(p)) {
    std::vector<DiscQuadrature> rules;
    for (std::size_t j = 0; j < d; ++j)
      rules.push_back(DiscQuadrature::for_degree(alpha, static_cast<int>(F.degree_in(j)), p));
    return polydisc_norm_quad(F, p, alpha, rules);
  }
  auto rules_at = [&](int nr, int M) {
    std::vector<DiscQuadrature> rules;
    for (std::size_t j = 0; j < d; ++j) {
      const int ang = std::max(M, 4 * static_cast<int>(F.degree_in(j)) + 8);
      rules.emplace_back(alpha, nr, ang, RadialVariable::r);
    }
    return rules;
  };
  const int nr = std::max(opt.radial_nodes, 2);
  const int M = std::max(opt.angular_nodes, 2);
  NormResult fine = polydisc_norm_quad(F, p, alpha, rules_at(nr, M));
  NormResult coarse = polydisc_norm_quad(F, p, alpha, rules_at(nr / 2, M / 2));
  const double If = std::pow(fine.value, p);
  const double Ic = std::pow(coarse.value, p);
  NormResult n = norm_from_integral(If, std::abs(If - Ic), p);
  n.radial_nodes = fine.radial_nodes;
  n.angular_nodes = fine.angular_nodes;
  return n;
}

NormResult dirichlet_norm_quad(const DirichletPolynomial& f, double p, const PolydiscQuadOptions& opt) {
  return polydisc_norm_quad(bohr_lift(f), p, 2.0, opt);
}

bool supported_on_first_primes(const DirichletPolynomial& f, std::size_t d) {
  static const std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  if (d > std::size(small)) throw std::invalid_argument("supported_on_first_primes: d too large");
  for (const auto& [n, a] : f.coeffs()) {
    std::uint64_t m = n;
    for (std::size_t j = 0; j < d; ++j)
      while (m % small[j] == 0) m /= small[j];
    if (m != 1) return false;
  }
  return true;
}

GapResult weisslerhalf_gap(const DirichletPolynomial& f, double p, double q, double eps,
                           const PolydiscQuadOptions& opt) {
  if (!(p > 0 && p <= q)) throw std::domain_error("weisslerhalf_gap: requires 0 < p <= q");
  if (!(eps > 0)) throw std::domain_error("weisslerhalf_gap: requires eps > 0");
  check_support(f, "weisslerhalf_gap");
  auto lhs = dirichlet_norm_quad(translate(f, eps), q, opt);
  auto rhs = dirichlet_norm_quad(f, p, opt);
  return {lhs.value, rhs.value, lhs.value - rhs.value, lhs.error + rhs.error};
}

GapResult helson_gap(const DirichletPolynomial& f, const PolydiscQuadOptions& opt) {
  check_support(f, "helson_gap");
  auto lhs = dirichlet_norm_quad(f, 1.0, opt);
  const double rhs = norm_a2alpha(f, 4.0);
  return {lhs.value, rhs, lhs.value - rhs, lhs.error};
}

AhlGap ahl_gap(const DirichletPolynomial& f, double p, const PolydiscQuadOptions& opt) {
  if (!(p > 0 && p <= 2)) throw std::domain_error("ahl_gap: requires 0 < p <= 2");
  check_support(f, "ahl_gap");
  auto lhs = dirichlet_norm_quad(f, p, opt);
  double direct = 0.0, dilation = 0.0, full = 0.0;
  for (const auto& [n, a] : f.coeffs()) {
    const MultiIndex k = factorize(n);
    bool squarefree = true;
    for (auto e : k.exponents()) squarefree = squarefree && e <= 1;
    const double w = std::norm(a);
    if (squarefree) direct += w / divisor_fn(4.0 / p, k);
    dilation += w * std::pow(p / 2.0, static_cast<double>(k.total_degree())) / divisor_fn(2.0, k);
    full += w / divisor_fn(4.0 / p, k);
  }
  auto gap = [&](double rhs) { return GapResult{lhs.value, rhs, lhs.value - rhs, lhs.error}; };
  AhlGap out{gap(std::sqrt(direct)), gap(std::sqrt(dilation)), std::nullopt};
  // p = 2 / (1 + k/2)  <=>  k = 4/p - 2 is a non-negative integer
  const double k = 4.0 / p - 2.0;
  if (k >= -1e-12 && std::abs(k - std::round(k)) < 1e-12) out.mobius_free = gap(std::sqrt(full));
  return out;
}

GapResult dirichlet_pointwise_gap(const DirichletPolynomial& f, double p, double sigma,
                                  const PolydiscQuadOptions& opt) {
  if (!(sigma > 0.51)) throw std::domain_error("dirichlet_pointwise_gap: requires sigma > 0.51");
  check_support(f, "dirichlet_pointwise_gap");
  auto nrm = dirichlet_norm_quad(f, p, opt);
  const double factor = std::pow(zeta_real(2.0 * sigma), 2.0 / p);
  const double lhs = factor * nrm.value;
  const double rhs = std::abs(f(cplx(sigma, 0.0)));
  return {lhs, rhs, lhs - rhs, factor * nrm.error};
}

DirichletPolynomial truncated_kernel(double sigma, std::uint64_t max_n, std::size_t d) {
  std::map<std::uint64_t, cplx> c;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    DirichletPolynomial probe = DirichletPolynomial::term(n);
    if (!supported_on_first_primes(probe, d)) continue;
    c.emplace(n, divisor_fn(2.0, n) * std::exp(-sigma * std::log(static_cast<double>(n))));
  }
  return DirichletPolynomial(std::move(c));
}

DirichletPolynomial random_dirichlet_polynomial(std::mt19937_64& rng, std::uint64_t max_n, std::size_t d) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::map<std::uint64_t, cplx> c;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    if (!supported_on_first_primes(DirichletPolynomial::term(n), d)) continue;
    const double re = u(rng);
    const double im = u(rng);
    c.emplace(n, cplx(re, im));
  }
  return DirichletPolynomial(std::move(c));
}

}  // namespace bergman

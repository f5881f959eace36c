#pragma once

// Dirichlet polynomials, their Bohr lifts to the polydisc, and the norm
// inequalities of the Dirichlet-series Bergman spaces checked on finite
// truncations.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "bergman/arith.hpp"
#include "bergman/disc.hpp"

namespace bergman {

/// f(s) = sum_n a_n n^-s with finitely many nonzero a_n.
class DirichletPolynomial {
 public:
  DirichletPolynomial() = default;
  /// Zero coefficients are dropped; n = 0 throws std::domain_error.
  explicit DirichletPolynomial(std::map<std::uint64_t, cplx> coeffs);
  static DirichletPolynomial constant(cplx c) { return DirichletPolynomial({{1, c}}); }
  static DirichletPolynomial term(std::uint64_t n, cplx c = 1.0) { return DirichletPolynomial({{n, c}}); }

  [[nodiscard]] const std::map<std::uint64_t, cplx>& coeffs() const { return a_; }
  [[nodiscard]] cplx coeff(std::uint64_t n) const;
  /// Largest n in the support (0 for the zero polynomial).
  [[nodiscard]] std::uint64_t max_n() const { return a_.empty() ? 0 : a_.rbegin()->first; }
  [[nodiscard]] cplx operator()(cplx s) const;

  friend DirichletPolynomial operator+(const DirichletPolynomial& f, const DirichletPolynomial& g);
  /// Dirichlet convolution.
  friend DirichletPolynomial operator*(const DirichletPolynomial& f, const DirichletPolynomial& g);
  friend DirichletPolynomial operator*(cplx c, const DirichletPolynomial& f);
  friend bool operator==(const DirichletPolynomial&, const DirichletPolynomial&) = default;

 private:
  std::map<std::uint64_t, cplx> a_;
};

/// Rows "n,re,im" after a header line.
void write_csv(std::ostream& os, const DirichletPolynomial& f);
/// Accepts an optional header. Throws std::invalid_argument on malformed rows.
DirichletPolynomial read_dirichlet_csv(std::istream& is);

/// Analytic polynomial in finitely many variables, keyed by multi-index.
class PolydiscPolynomial {
 public:
  PolydiscPolynomial() = default;
  explicit PolydiscPolynomial(std::map<MultiIndex, cplx> coeffs);

  [[nodiscard]] const std::map<MultiIndex, cplx>& coeffs() const { return a_; }
  [[nodiscard]] cplx coeff(const MultiIndex& k) const;
  /// Number of variables used (index of the last one + 1).
  [[nodiscard]] std::size_t dimension() const;
  /// Degree in variable j.
  [[nodiscard]] std::uint32_t degree_in(std::size_t j) const;
  [[nodiscard]] cplx operator()(std::span<const cplx> z) const;

  friend PolydiscPolynomial operator+(const PolydiscPolynomial& f, const PolydiscPolynomial& g);
  friend PolydiscPolynomial operator*(const PolydiscPolynomial& f, const PolydiscPolynomial& g);
  friend bool operator==(const PolydiscPolynomial&, const PolydiscPolynomial&) = default;

 private:
  std::map<MultiIndex, cplx> a_;
};

/// a_n n^-s  ->  a_n z^kappa(n).
PolydiscPolynomial bohr_lift(const DirichletPolynomial& f);
DirichletPolynomial bohr_unlift(const PolydiscPolynomial& F);

/// (sum |a_n|^2 / d_alpha(n))^(1/2).
double norm_a2alpha(const DirichletPolynomial& f, double alpha);
/// (sum |a_kappa|^2 / c_alpha(kappa))^(1/2).
double norm_a2alpha(const PolydiscPolynomial& F, double alpha);

/// F(r_1 z_1, r_2 z_2, ...); variables beyond r.size() are left alone.
PolydiscPolynomial dilate(const PolydiscPolynomial& F, std::span<const double> r);
/// f(s + eps): a_n -> a_n n^-eps.
DirichletPolynomial translate(const DirichletPolynomial& f, double eps);

/// Largest dimension the tensor quadrature accepts.
inline constexpr std::size_t kMaxQuadDimension = 3;

struct PolydiscQuadOptions {
  int radial_nodes = 24;   // per variable, for non-even p
  int angular_nodes = 48;  // per variable, raised to 4 deg + 8 if smaller
};

/// (integral |F|^p dm_alpha^{(x)d})^(1/p) on the tensor product of the given
/// per-variable rules. For even p the rules are checked against the required
/// exactness. Throws std::domain_error if F has more than kMaxQuadDimension
/// variables or more variables than rules.
NormResult polydisc_norm_quad(const PolydiscPolynomial& F, double p, double alpha,
                              const std::vector<DiscQuadrature>& rules);
/// Default rules: exact for even p. Otherwise the r-variable rule of the given
/// order, with the error estimated against the rule of half the order.
NormResult polydisc_norm_quad(const PolydiscPolynomial& F, double p, double alpha,
                              const PolydiscQuadOptions& opt = {});

/// ||f||_{A^p} of a Dirichlet polynomial (alpha = 2 in every variable).
NormResult dirichlet_norm_quad(const DirichletPolynomial& f, double p, const PolydiscQuadOptions& opt = {});

/// ||T_eps f||_{A^q} - ||f||_{A^p}. Throws std::domain_error unless
/// 0 < p <= q, eps > 0 and f is supported on 2-, 3-, 5-smooth integers.
GapResult weisslerhalf_gap(const DirichletPolynomial& f, double p, double q, double eps,
                           const PolydiscQuadOptions& opt = {});

/// ||f||_{A^1} - (sum |a_n|^2 / d_4(n))^(1/2).
GapResult helson_gap(const DirichletPolynomial& f, const PolydiscQuadOptions& opt = {});

struct AhlGap {
  GapResult direct;         // against sum |a_n|^2 |mu(n)| / d_{4/p}(n)
  GapResult dilation_path;  // against sum |a_n|^2 (p/2)^Omega(n) / d(n)
  std::optional<GapResult> mobius_free;  // against sum |a_n|^2 / d_{4/p}(n), only when p = 2/(1 + k/2)
};
/// Both sides of the square-free coefficient bound for 0 < p <= 2.
AhlGap ahl_gap(const DirichletPolynomial& f, double p, const PolydiscQuadOptions& opt = {});

/// zeta(2 sigma)^(2/p) ||f||_{A^p} - |f(sigma)|. Throws std::domain_error for
/// sigma <= 0.51.
GapResult dirichlet_pointwise_gap(const DirichletPolynomial& f, double p, double sigma,
                                  const PolydiscQuadOptions& opt = {});

/// Truncated reproducing kernel sum_{n in S} d(n) n^-sigma n^-s of A^2 over
/// the integers n <= max_n whose prime factors are among the first d primes.
DirichletPolynomial truncated_kernel(double sigma, std::uint64_t max_n, std::size_t d);

/// Coefficients uniform in the square [-1,1]^2 on every n <= max_n whose prime
/// factors are among the first d primes.
DirichletPolynomial random_dirichlet_polynomial(std::mt19937_64& rng, std::uint64_t max_n, std::size_t d);

/// True if every n in the support factors over the first d primes.
bool supported_on_first_primes(const DirichletPolynomial& f, std::size_t d);

}  // namespace bergman

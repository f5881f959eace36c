#pragma once

// Exact-integer multiplicative number theory: primes, prime-exponent
// multi-indices, generalized divisor functions d_alpha and the binomial-series
// coefficients c_alpha(j) they are built from.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "bergman/rational.hpp"

namespace bergman {

/// The first J primes in increasing order.
class PrimeTable {
 public:
  PrimeTable() = default;

  static PrimeTable first(std::size_t count);
  static PrimeTable up_to(std::uint64_t limit);

  [[nodiscard]] std::span<const std::uint64_t> primes() const { return primes_; }
  [[nodiscard]] std::size_t size() const { return primes_.size(); }
  [[nodiscard]] std::uint64_t operator[](std::size_t j) const { return primes_[j]; }
  [[nodiscard]] std::uint64_t largest() const { return primes_.empty() ? 1 : primes_.back(); }
  /// Position j with primes()[j] == p, if p is in the table.
  [[nodiscard]] std::optional<std::size_t> index_of(std::uint64_t p) const;

 private:
  explicit PrimeTable(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {}
  std::vector<std::uint64_t> primes_;
};

PrimeTable primes_first(std::size_t count);

/// Shared table of all primes below 10^7, built once on first use.
const PrimeTable& default_prime_table();

bool is_prime(std::uint64_t n);

/// Exponent vector kappa with n = prod_j p_j^kappa_j. Canonical form has no
/// trailing zeros, so equal indices compare equal.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint32_t> exponents);

  [[nodiscard]] std::uint32_t operator[](std::size_t j) const { return j < exps_.size() ? exps_[j] : 0; }
  /// Number of variables touched (index of last nonzero exponent + 1).
  [[nodiscard]] std::size_t dimension() const { return exps_.size(); }
  [[nodiscard]] std::uint64_t total_degree() const;
  [[nodiscard]] bool empty() const { return exps_.empty(); }
  [[nodiscard]] std::span<const std::uint32_t> exponents() const { return exps_; }

  MultiIndex& operator+=(const MultiIndex& o);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<std::uint32_t> exps_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& k);

/// kappa(n) by trial division. Throws std::out_of_range if n has a prime
/// factor that is not in the table.
MultiIndex factorize(std::uint64_t n, const PrimeTable& table);
MultiIndex factorize(std::uint64_t n);

/// prod_j p_j^kappa_j. Throws std::overflow_error past 2^64 and
/// std::out_of_range if kappa uses more primes than the table holds.
std::uint64_t index_to_integer(const MultiIndex& kappa, const PrimeTable& table);
std::uint64_t index_to_integer(const MultiIndex& kappa);

/// c_alpha(j) = binom(j + alpha - 1, j), the coefficients of (1 - w)^-alpha.
double binom_coeff(double alpha, std::uint64_t j);
Rational binom_coeff(const Rational& alpha, std::uint64_t j);

/// d_alpha(n) = prod_j c_alpha(kappa_j(n)), the coefficients of zeta^alpha.
double divisor_fn(double alpha, const MultiIndex& kappa);
double divisor_fn(double alpha, std::uint64_t n);
Rational divisor_fn(const Rational& alpha, const MultiIndex& kappa);
Rational divisor_fn(const Rational& alpha, std::uint64_t n);

/// Sieve tables for 1 <= n <= limit built from the smallest prime factor.
class ArithmeticTables {
 public:
  explicit ArithmeticTables(std::uint64_t limit);

  [[nodiscard]] std::uint64_t limit() const { return limit_; }
  [[nodiscard]] std::uint32_t smallest_prime_factor(std::uint64_t n) const { return spf_[n]; }

  /// Prime-power decomposition of n as (p, k) pairs, p increasing.
  struct PrimePower {
    std::uint64_t p;
    std::uint32_t k;
  };
  [[nodiscard]] std::vector<PrimePower> prime_powers(std::uint64_t n) const;

  /// Calls visit(p, k) for each prime power p^k exactly dividing n. No
  /// allocation; used by the hot summation loops.
  template <class F>
  void for_each_prime_power(std::uint64_t n, F&& visit) const {
    while (n > 1) {
      const std::uint64_t p = spf_[n];
      std::uint32_t k = 0;
      do {
        n /= p;
        ++k;
      } while (n % p == 0);
      visit(p, k);
    }
  }

  [[nodiscard]] std::uint64_t d2(std::uint64_t n) const;  // usual divisor count
  [[nodiscard]] std::uint64_t d4(std::uint64_t n) const;
  [[nodiscard]] double d_alpha(double alpha, std::uint64_t n) const;
  [[nodiscard]] std::uint32_t big_omega(std::uint64_t n) const;  // with multiplicity
  [[nodiscard]] std::uint32_t small_omega(std::uint64_t n) const;  // distinct
  [[nodiscard]] int moebius(std::uint64_t n) const;
  [[nodiscard]] bool is_squarefree(std::uint64_t n) const { return moebius(n) != 0; }
  /// Largest prime factor (1 for n = 1).
  [[nodiscard]] std::uint64_t largest_prime_factor(std::uint64_t n) const;

  /// CSV with header "n,d_2,d_4,Omega,omega,mu", one row per 1 <= n <= rows.
  void write_csv(std::ostream& os, std::uint64_t rows) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
};

/// Shared tables of at least the requested size. Grows (never shrinks) and is
/// safe to call from multiple threads.
const ArithmeticTables& arithmetic_tables(std::uint64_t limit);

struct ConvolutionResidual {
  double multiplicative = 0;  // max_l |sum_{mn=l} d_a(m) d_b(n) - d_{a+b}(l)|
  double additive = 0;        // max_l |sum_{j+k=l} c_a(j) c_b(k) - c_{a+b}(l)|
  double multiplicative_relative = 0;
  double additive_relative = 0;
};

/// Floating-point residuals of the Dirichlet and power-series convolution
/// identities over l <= limit (additive check over l <= additive_limit).
ConvolutionResidual convolution_residual(double alpha, double beta, std::uint64_t limit,
                                         std::uint64_t additive_limit = 200);

struct ExactConvolutionResidual {
  Rational multiplicative;
  Rational additive;
};

/// Same identities in exact rational arithmetic.
ExactConvolutionResidual convolution_residual(const Rational& alpha, const Rational& beta,
                                              std::uint64_t limit, std::uint64_t additive_limit);

}  // namespace bergman

#include "bergman/arith.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "bergman/parallel.hpp"

namespace bergman {
namespace {

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t k = i * i; k <= limit; k += i) composite[k] = true;
  }
  return out;
}

// Exponents of n in increasing prime order, by plain trial division.
std::vector<std::uint32_t> exponent_multiset(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    std::uint32_t k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) out.push_back(k);
  }
  if (n > 1) out.push_back(1);
  return out;
}

}  // namespace

PrimeTable PrimeTable::first(std::size_t count) {
  if (count == 0) return PrimeTable{};
  // p_n < n (log n + log log n) for n >= 6
  double n = static_cast<double>(std::max<std::size_t>(count, 6));
  auto bound = static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
  auto primes = sieve_primes(bound);
  primes.resize(count);
  return PrimeTable(std::move(primes));
}

PrimeTable PrimeTable::up_to(std::uint64_t limit) { return PrimeTable(sieve_primes(limit)); }

std::optional<std::size_t> PrimeTable::index_of(std::uint64_t p) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - primes_.begin());
}

PrimeTable primes_first(std::size_t count) { return PrimeTable::first(count); }

const PrimeTable& default_prime_table() {
  static const PrimeTable table = PrimeTable::up_to(10'000'000);
  return table;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

MultiIndex::MultiIndex(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

std::uint64_t MultiIndex::total_degree() const {
  std::uint64_t t = 0;
  for (auto e : exps_) t += e;
  return t;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) {
  if (o.exps_.size() > exps_.size()) exps_.resize(o.exps_.size(), 0);
  for (std::size_t j = 0; j < o.exps_.size(); ++j) exps_[j] += o.exps_[j];
  return *this;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  std::size_t n = std::max(a.dimension(), b.dimension());
  for (std::size_t j = 0; j < n; ++j) {
    if (auto c = a[j] <=> b[j]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& k) {
  os << '(';
  for (std::size_t j = 0; j < k.dimension(); ++j) os << (j ? "," : "") << k[j];
  return os << ')';
}

MultiIndex factorize(std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  std::vector<std::uint32_t> exps;
  for (std::size_t j = 0; j < table.size() && n > 1; ++j) {
    std::uint64_t p = table[j];
    if (p > n / p) {
      // remaining cofactor is prime
      auto idx = table.index_of(n);
      if (!idx) break;
      exps.resize(*idx + 1, 0);
      exps[*idx] += 1;
      n = 1;
      break;
    }
    std::uint32_t k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) {
      exps.resize(j + 1, 0);
      exps[j] = k;
    }
  }
  if (n > 1) throw std::out_of_range("factorize: prime factor beyond the prime table");
  return MultiIndex(std::move(exps));
}

MultiIndex factorize(std::uint64_t n) { return factorize(n, default_prime_table()); }

std::uint64_t index_to_integer(const MultiIndex& kappa, const PrimeTable& table) {
  if (kappa.dimension() > table.size()) throw std::out_of_range("index_to_integer: index longer than prime table");
  std::uint64_t n = 1;
  for (std::size_t j = 0; j < kappa.dimension(); ++j) {
    for (std::uint32_t e = 0; e < kappa[j]; ++e) {
      if (__builtin_mul_overflow(n, table[j], &n)) throw std::overflow_error("index_to_integer: overflow");
    }
  }
  return n;
}

std::uint64_t index_to_integer(const MultiIndex& kappa) { return index_to_integer(kappa, default_prime_table()); }

double binom_coeff(double alpha, std::uint64_t j) {
  double c = 1.0;
  for (std::uint64_t i = 1; i <= j; ++i) c *= (alpha + static_cast<double>(i) - 1.0) / static_cast<double>(i);
  return c;
}

Rational binom_coeff(const Rational& alpha, std::uint64_t j) {
  Rational c(1);
  for (std::uint64_t i = 1; i <= j; ++i) {
    auto ii = static_cast<std::int64_t>(i);
    c *= (alpha + Rational(ii - 1)) / Rational(ii);
  }
  return c;
}

double divisor_fn(double alpha, const MultiIndex& kappa) {
  double d = 1.0;
  for (auto e : kappa.exponents()) d *= binom_coeff(alpha, e);
  return d;
}

double divisor_fn(double alpha, std::uint64_t n) {
  double d = 1.0;
  for (auto e : exponent_multiset(n)) d *= binom_coeff(alpha, e);
  return d;
}

Rational divisor_fn(const Rational& alpha, const MultiIndex& kappa) {
  Rational d(1);
  for (auto e : kappa.exponents()) d *= binom_coeff(alpha, e);
  return d;
}

Rational divisor_fn(const Rational& alpha, std::uint64_t n) {
  Rational d(1);
  for (auto e : exponent_multiset(n)) d *= binom_coeff(alpha, e);
  return d;
}

ArithmeticTables::ArithmeticTables(std::uint64_t limit) : limit_(limit), spf_(limit + 1, 0) {
  if (limit > 0xFFFFFFFFull) throw std::length_error("ArithmeticTables: limit too large");
  if (limit >= 1) spf_[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t k = i; k <= limit; k += i)
      if (spf_[k] == 0) spf_[k] = static_cast<std::uint32_t>(i);
  }
}

std::vector<ArithmeticTables::PrimePower> ArithmeticTables::prime_powers(std::uint64_t n) const {
  if (n == 0 || n > limit_) throw std::out_of_range("ArithmeticTables: n outside table");
  std::vector<PrimePower> out;
  for_each_prime_power(n, [&](std::uint64_t p, std::uint32_t k) { out.push_back({p, k}); });
  return out;
}

namespace {
void check_range(std::uint64_t n, std::uint64_t limit) {
  if (n == 0 || n > limit) throw std::out_of_range("ArithmeticTables: n outside table");
}
}  // namespace

std::uint64_t ArithmeticTables::d2(std::uint64_t n) const {
  check_range(n, limit_);
  std::uint64_t d = 1;
  for_each_prime_power(n, [&](std::uint64_t, std::uint32_t k) { d *= k + 1; });
  return d;
}

std::uint64_t ArithmeticTables::d4(std::uint64_t n) const {
  check_range(n, limit_);
  std::uint64_t d = 1;
  for_each_prime_power(n, [&](std::uint64_t, std::uint32_t k) { d *= std::uint64_t{k + 1} * (k + 2) * (k + 3) / 6; });
  return d;
}

double ArithmeticTables::d_alpha(double alpha, std::uint64_t n) const {
  check_range(n, limit_);
  double d = 1.0;
  for_each_prime_power(n, [&](std::uint64_t, std::uint32_t k) { d *= binom_coeff(alpha, k); });
  return d;
}

std::uint32_t ArithmeticTables::big_omega(std::uint64_t n) const {
  check_range(n, limit_);
  std::uint32_t t = 0;
  for_each_prime_power(n, [&](std::uint64_t, std::uint32_t k) { t += k; });
  return t;
}

std::uint32_t ArithmeticTables::small_omega(std::uint64_t n) const {
  check_range(n, limit_);
  std::uint32_t t = 0;
  for_each_prime_power(n, [&](std::uint64_t, std::uint32_t) { ++t; });
  return t;
}

int ArithmeticTables::moebius(std::uint64_t n) const {
  check_range(n, limit_);
  int mu = 1;
  for_each_prime_power(n, [&](std::uint64_t, std::uint32_t k) { mu = k > 1 ? 0 : -mu; });
  return mu;
}

std::uint64_t ArithmeticTables::largest_prime_factor(std::uint64_t n) const {
  auto pp = prime_powers(n);
  return pp.empty() ? 1 : pp.back().p;
}

void ArithmeticTables::write_csv(std::ostream& os, std::uint64_t rows) const {
  rows = std::min(rows, limit_);
  os << "n,d_2,d_4,Omega,omega,mu\n";
  for (std::uint64_t n = 1; n <= rows; ++n)
    os << n << ',' << d2(n) << ',' << d4(n) << ',' << big_omega(n) << ',' << small_omega(n) << ',' << moebius(n)
       << '\n';
}

const ArithmeticTables& arithmetic_tables(std::uint64_t limit) {
  static std::mutex mu;
  // Older tables stay alive so references handed out earlier remain valid.
  static std::vector<std::unique_ptr<ArithmeticTables>> cache;
  std::lock_guard lock(mu);
  if (cache.empty() || cache.back()->limit() < limit) {
    std::uint64_t size = std::max<std::uint64_t>(limit, cache.empty() ? 1000 : 2 * cache.back()->limit());
    cache.push_back(std::make_unique<ArithmeticTables>(size));
  }
  return *cache.back();
}

ConvolutionResidual convolution_residual(double alpha, double beta, std::uint64_t limit,
                                         std::uint64_t additive_limit) {
  const auto& tab = arithmetic_tables(limit);
  std::vector<double> da(limit + 1), db(limit + 1), conv(limit + 1, 0.0);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    da[n] = tab.d_alpha(alpha, n);
    db[n] = tab.d_alpha(beta, n);
  }
  for (std::uint64_t m = 1; m <= limit; ++m)
    for (std::uint64_t n = 1; m * n <= limit; ++n) conv[m * n] += da[m] * db[n];

  ConvolutionResidual r;
  for (std::uint64_t l = 1; l <= limit; ++l) {
    double target = tab.d_alpha(alpha + beta, l);
    double diff = std::abs(conv[l] - target);
    r.multiplicative = std::max(r.multiplicative, diff);
    r.multiplicative_relative = std::max(r.multiplicative_relative, diff / target);
  }
  for (std::uint64_t l = 0; l <= additive_limit; ++l) {
    double s = 0.0;
    for (std::uint64_t j = 0; j <= l; ++j) s += binom_coeff(alpha, j) * binom_coeff(beta, l - j);
    double target = binom_coeff(alpha + beta, l);
    double diff = std::abs(s - target);
    r.additive = std::max(r.additive, diff);
    r.additive_relative = std::max(r.additive_relative, diff / target);
  }
  return r;
}

ExactConvolutionResidual convolution_residual(const Rational& alpha, const Rational& beta, std::uint64_t limit,
                                              std::uint64_t additive_limit) {
  const auto& tab = arithmetic_tables(limit);
  std::uint64_t kmax = additive_limit + 1;
  std::vector<Rational> ca(kmax + 1), cb(kmax + 1), cab(kmax + 1);
  ca[0] = cb[0] = cab[0] = Rational(1);
  for (std::uint64_t j = 1; j <= kmax; ++j) {
    auto jj = static_cast<std::int64_t>(j);
    ca[j] = ca[j - 1] * (alpha + Rational(jj - 1)) / Rational(jj);
    cb[j] = cb[j - 1] * (beta + Rational(jj - 1)) / Rational(jj);
    cab[j] = cab[j - 1] * (alpha + beta + Rational(jj - 1)) / Rational(jj);
  }
  auto exact_d = [&](const std::vector<Rational>& c, std::uint64_t n) {
    Rational d(1);
    for (auto [p, k] : tab.prime_powers(n)) {
      if (k >= c.size()) throw std::out_of_range("convolution_residual: exponent table too short");
      d *= c[k];
    }
    return d;
  };

  std::vector<Rational> da(limit + 1), db(limit + 1), conv(limit + 1, Rational(0));
  for (std::uint64_t n = 1; n <= limit; ++n) {
    da[n] = exact_d(ca, n);
    db[n] = exact_d(cb, n);
  }
  for (std::uint64_t m = 1; m <= limit; ++m)
    for (std::uint64_t n = 1; m * n <= limit; ++n) conv[m * n] += da[m] * db[n];

  ExactConvolutionResidual r{Rational(0), Rational(0)};
  for (std::uint64_t l = 1; l <= limit; ++l) r.multiplicative = std::max(r.multiplicative, abs(conv[l] - exact_d(cab, l)));

  auto per_l = parallel_map<Rational>(additive_limit + 1, [&](std::size_t l) {
    Rational s(0);
    for (std::size_t j = 0; j <= l; ++j) s += ca[j] * cb[l - j];
    return abs(s - cab[l]);
  });
  for (const auto& v : per_l) r.additive = std::max(r.additive, v);
  return r;
}

}  // namespace bergman

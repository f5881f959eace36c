#include "bergman/special.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace bergman {
namespace {

// B_{2k} for k = 1..11
constexpr std::array<long double, 11> kBernoulli2k = {
    1.0L / 6,        -1.0L / 30,         1.0L / 42,     -1.0L / 30,         5.0L / 66,       -691.0L / 2730,
    7.0L / 6,        -3617.0L / 510,     43867.0L / 798, -174611.0L / 330,  854513.0L / 138};

}  // namespace

ZetaEval zeta_euler_maclaurin(double s, int N, int K) {
  if (!(s > 1.0)) throw std::domain_error("zeta_real: requires s > 1");
  if (N < 2 || K < 1 || K >= static_cast<int>(kBernoulli2k.size()))
    throw std::invalid_argument("zeta_euler_maclaurin: bad N or K");
  const long double ls = s;
  long double head = 0;
  for (int n = N - 1; n >= 1; --n) head += std::pow(static_cast<long double>(n), -ls);
  const long double nn = N;
  long double tail = std::pow(nn, 1 - ls) / (ls - 1) + 0.5L * std::pow(nn, -ls);

  // term_k = B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  long double rising = ls;  // s(s+1)...(s+2k-2), starting at k = 1
  long double factorial = 2;  // (2k)!
  long double npow = std::pow(nn, -ls - 1);
  long double next = 0;
  for (int k = 1; k <= K + 1; ++k) {
    long double term = kBernoulli2k[static_cast<std::size_t>(k - 1)] / factorial * rising * npow;
    if (k <= K) {
      tail += term;
    } else {
      next = term;
    }
    rising *= (ls + 2 * k - 1) * (ls + 2 * k);
    factorial *= (2.0L * k + 1) * (2.0L * k + 2);
    npow /= nn * nn;
  }
  return {static_cast<double>(head + tail), static_cast<double>(std::fabs(next))};
}

double zeta_real(double s) { return zeta_euler_maclaurin(s).value; }

double gamma_real(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_real: requires x > 0");
  return std::tgamma(x);
}

double beta_real(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw std::domain_error("beta_real: requires x, y > 0");
  if (x + y < 140.0) return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y);
  return std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

}  // namespace bergman

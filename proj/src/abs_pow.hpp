#pragma once

#include <cmath>
#include <complex>

namespace bergman {

// |z|^p, avoiding pow when 2p is a small integer.
inline double abs_pow(std::complex<double> z, double p) {
  const double n = std::norm(z);
  if (p == 2.0) return n;
  if (p == 1.0) return std::sqrt(n);
  if (p == 4.0) return n * n;
  const double q = 2.0 * p;
  if (q == std::floor(q) && q <= 16.0) {
    // n^(p/2) = (n^(1/4))^q
    const double quarter = std::sqrt(std::sqrt(n));
    double v = 1.0;
    for (int k = static_cast<int>(q); k > 0; --k) v *= quarter;
    return v;
  }
  return std::pow(n, 0.5 * p);
}

}  // namespace bergman

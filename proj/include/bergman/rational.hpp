#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace bergman {

using int128 = __int128;

/// Exact rational number with 128-bit numerator and denominator.
///
/// Always stored reduced with a positive denominator. Every arithmetic
/// operation checks for overflow and throws std::overflow_error rather than
/// wrapping, so a value that compares equal is equal.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int128 num, int128 den = 1);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den = 1) : Rational(int128{num}, int128{den}) {}
  Rational(int num, int den = 1) : Rational(int128{num}, int128{den}) {}  // NOLINT

  [[nodiscard]] int128 num() const { return num_; }
  [[nodiscard]] int128 den() const { return den_; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  int128 num_ = 0;
  int128 den_ = 1;
};

Rational abs(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);
std::string to_string(int128 v);

}  // namespace bergman

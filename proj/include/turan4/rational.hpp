#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace turan4 {

using BigInt = mpz_class;

BigInt binomial(const BigInt& n, unsigned long k);
BigInt binomial(std::uint64_t n, unsigned long k);
std::string to_string(const BigInt& value);

enum class Rounding { Down, Up };

/// Exact rational number. Always reduced, denominator positive.
class Rational {
public:
  Rational() = default;
  Rational(long long value) : value_(BigInt(std::to_string(value))) {}
  Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den);

  /// Accepts "p", "p/q" or a finite decimal such as "0.13387".
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational pow(unsigned exponent) const;
  BigInt floor() const;
  BigInt ceil() const;
  double to_double() const { return value_.get_d(); }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  /// Fixed-point rendering with `digits` fractional digits. Rounding::Up
  /// never prints a value below the exact one, Rounding::Down never above.
  std::string to_decimal(int digits, Rounding mode) const;

private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace turan4

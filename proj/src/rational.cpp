#include "turan4/rational.hpp"

#include <ostream>

#include "turan4/error.hpp"

namespace turan4 {

BigInt binomial(const BigInt& n, unsigned long k) {
  if (n < 0) return 0;
  BigInt result;
  mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k);
  return result;
}

BigInt binomial(std::uint64_t n, unsigned long k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(BigInt(std::to_string(num)), BigInt(std::to_string(den))) {}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  try {
    if (const auto dot = s.find('.'); dot != std::string::npos) {
      const bool negative = s[0] == '-';
      const std::string int_part = s.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
      const std::string frac_part = s.substr(dot + 1);
      BigInt den = 1;
      for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
      BigInt num((int_part.empty() ? std::string("0") : int_part) + frac_part, 10);
      return Rational(negative ? BigInt(-num) : num, den);
    }
    if (const auto slash = s.find('/'); slash != std::string::npos) {
      return Rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
    }
    return Rational(BigInt(s, 10));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: " + s);
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  Rational r;
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  r.value_ = mpq_class(n, d);
  r.value_.canonicalize();
  return r;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int digits, Rounding mode) const {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = *this * Rational(scale);
  const BigInt units = mode == Rounding::Up ? scaled.ceil() : scaled.floor();
  const bool negative = units < 0;
  BigInt magnitude = negative ? BigInt(-units) : units;
  const BigInt whole = magnitude / scale;
  const BigInt frac = magnitude % scale;
  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace turan4

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hodge {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}
  Rational(int value) : value_(value) {}
  Rational(const BigInt &value) : value_(value) {}
  Rational(const BigInt &num, const BigInt &den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  static Rational from_mpq(mpq_class value);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class &mpq() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when q == 1.
  std::string to_string() const;
  /// Inverse of to_string(); accepts an optional sign and surrounding
  /// whitespace. Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
  Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
  Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  Rational operator-() const { return from_mpq(-value_); }

  friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
  mpq_class value_{0};
};

Rational abs(const Rational &r);
Rational pow(const Rational &base, unsigned exponent);

} // namespace hodge

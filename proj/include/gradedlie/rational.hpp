#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "gradedlie/errors.hpp"

namespace gradedlie {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored reduced: gcd(|num|, den) = 1 and
/// den > 0. All arithmetic is exact; there is no floating-point path.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : value_(n) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0)
      value_ = boost::multiprecision::cpp_rational(-num, -den);
    else
      value_ = boost::multiprecision::cpp_rational(num, den);
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  /// Document form: "num/den", with "/den" omitted when den = 1.
  std::string str() const {
    std::string s = numerator().convert_to<std::string>();
    if (denominator() != 1) {
      s += '/';
      s += denominator().convert_to<std::string>();
    }
    return s;
  }

  /// Inverse of str(). Accepts an optional leading '-', digits, and at most
  /// one '/' followed by a positive integer.
  static Rational parse(const std::string& text);

 private:
  boost::multiprecision::cpp_rational value_;
};

}  // namespace gradedlie

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "octo/error.hpp"

namespace octo {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary precision rational number.
///
/// Always kept in canonical form: the denominator is positive, numerator and
/// denominator are coprime, and zero is 0/1. Every operation renormalizes, so
/// two rationals are equal iff their numerators and denominators are equal.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design of numeric types
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT

  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw ZeroDivision("rational with zero denominator");
    normalize();
  }

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  int sign() const noexcept { return num_.sign(); }
  bool is_integer() const noexcept { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  /// Parses `[-+]digits[/digits]`. No surrounding whitespace.
  static Rational parse(std::string_view text) {
    auto bad = [&] { return InvalidArgument("malformed rational '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    auto digits = [&](BigInt& out) {
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (pos == start) throw bad();
      out = BigInt(std::string(text.substr(start, pos - start)));
    };
    BigInt n, d = 1;
    digits(n);
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      digits(d);
    }
    if (pos != text.size()) throw bad();
    if (negative) n = -n;
    return Rational(std::move(n), std::move(d));
  }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational operator+() const { return *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    // Cross-cancel first so the products stay small.
    const BigInt g1 = gcd(a.num_, b.den_);
    const BigInt g2 = gcd(b.num_, a.den_);
    Rational r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    return r;
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ZeroDivision("rational division by zero");
    return a * b.reciprocal();
  }

  Rational reciprocal() const {
    if (is_zero()) throw ZeroDivision("reciprocal of zero");
    Rational r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_ < 0) {
      r.num_ = -r.num_;
      r.den_ = -r.den_;
    }
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  static BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    const BigInt g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace octo

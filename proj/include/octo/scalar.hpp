#pragma once

#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <system_error>

#include "octo/error.hpp"
#include "octo/rational.hpp"

namespace octo {

/// Per-backend behaviour the algebra needs beyond field arithmetic.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "exact";

  static Rational from_ratio(std::int64_t p, std::int64_t q) { return Rational(p, q); }
  static bool is_zero(const Rational& s) { return s.is_zero(); }
  static Rational abs(const Rational& s) { return octo::abs(s); }
  static double to_double(const Rational& s) { return s.to_double(); }
  static std::string to_string(const Rational& s) { return s.to_string(); }

  /// Unsigned coefficient literal: `digits` or `digits/digits`.
  static Rational parse(std::string_view text) {
    if (text.find('.') != std::string_view::npos)
      throw InvalidArgument("decimal coefficient '" + std::string(text) +
                            "' requires the float backend");
    return Rational::parse(text);
  }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "float";

  static double from_ratio(std::int64_t p, std::int64_t q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static bool is_zero(double s) { return s == 0.0; }
  static double abs(double s) { return std::fabs(s); }
  static double to_double(double s) { return s; }

  /// Shortest round-tripping fixed-point form. Never uses an exponent, so
  /// the output cannot be confused with a unit suffix such as `e1`.
  static std::string to_string(double s) {
    if (s == 0.0) return "0";
    char buf[512];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, s, std::chars_format::fixed);
    if (ec != std::errc()) return std::to_string(s);
    return std::string(buf, end);
  }

  /// Unsigned coefficient literal: `digits`, `digits/digits`, or a decimal
  /// `digits.digits` without exponent.
  static double parse(std::string_view text) {
    auto number = [&](std::string_view part) {
      double v = 0;
      if (part.empty() || part.front() == '-' || part.front() == '+')
        throw InvalidArgument("malformed coefficient '" + std::string(text) + "'");
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v,
                                       std::chars_format::fixed);
      if (ec != std::errc() || ptr != part.data() + part.size())
        throw InvalidArgument("malformed coefficient '" + std::string(text) + "'");
      return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return number(text);
    const double d = number(text.substr(slash + 1));
    if (d == 0.0) throw ZeroDivision("coefficient '" + std::string(text) + "' has zero denominator");
    return number(text.substr(0, slash)) / d;
  }
};

/// An ordered field with a registered backend.
template <class S>
concept Scalar = requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  { ScalarTraits<S>::exact } -> std::convertible_to<bool>;
};

}  // namespace octo

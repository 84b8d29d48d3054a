#pragma once

// Text forms of an octonion.
//
// Human form: a sum of terms `[+-]coeff[eK]` with K in 1..7 and the real
// part written as a bare coefficient, e.g. `2 - 3/4e1 + e7`. Coefficients are
// integers, fractions p/q, or (float backend only) decimals without exponent;
// whitespace is insignificant.
//
// Machine form: the eight coefficients, comma separated: `1,0,-3/4,0,0,0,0,2`.

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "octo/error.hpp"
#include "octo/octonion.hpp"

namespace octo {

template <Scalar S>
std::string to_text(const Octonion<S>& x) {
  std::string out;
  for (std::size_t k = 0; k < 8; ++k) {
    const S& c = x[k];
    if (ScalarTraits<S>::is_zero(c)) continue;
    const bool negative = c < S(0);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mag = ScalarTraits<S>::to_string(ScalarTraits<S>::abs(c));
    if (k == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag;
      out += 'e';
      out += static_cast<char>('0' + k);
    }
  }
  return out.empty() ? "0" : out;
}

template <Scalar S>
std::string to_machine(const Octonion<S>& x) {
  std::string out;
  for (std::size_t k = 0; k < 8; ++k) {
    if (k) out += ',';
    out += ScalarTraits<S>::to_string(x[k]);
  }
  return out;
}

namespace detail {

inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline std::size_t skip_space(std::string_view s, std::size_t pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  return pos;
}

inline bool is_digit(std::string_view s, std::size_t pos) {
  return pos < s.size() && s[pos] >= '0' && s[pos] <= '9';
}

/// Unit `e0`..`e7` at `pos` that is not the prefix of a longer identifier.
inline std::optional<int> unit_at(std::string_view s, std::size_t pos) {
  if (pos + 1 >= s.size() || s[pos] != 'e') return std::nullopt;
  const char d = s[pos + 1];
  if (d < '0' || d > '7') return std::nullopt;
  if (pos + 2 < s.size() && is_ident_char(s[pos + 2])) return std::nullopt;
  return d - '0';
}

inline bool term_starts_at(std::string_view s, std::size_t pos) {
  return is_digit(s, pos) || unit_at(s, pos).has_value();
}

}  // namespace detail

template <Scalar S>
struct LiteralScan {
  Octonion<S> value;
  std::size_t end;    // offset one past the last consumed character
  std::size_t terms;  // number of `coeff[eK]` terms read
};

/// Reads a literal starting at `pos` (leading whitespace allowed). Returns
/// nullopt when no literal starts there; throws SyntaxError when one starts
/// but is malformed.
template <Scalar S>
std::optional<LiteralScan<S>> scan_literal(std::string_view src, std::size_t pos) {
  using detail::skip_space;
  pos = skip_space(src, pos);
  if (pos >= src.size()) return std::nullopt;
  const bool signed_start = src[pos] == '+' || src[pos] == '-';
  if (!signed_start && !detail::term_starts_at(src, pos)) return std::nullopt;

  std::array<S, 8> acc{};
  std::size_t terms = 0;
  bool first = true;
  std::size_t last_end = pos;
  while (true) {
    std::size_t p = skip_space(src, pos);
    bool negative = false;
    if (p < src.size() && (src[p] == '+' || src[p] == '-')) {
      negative = src[p] == '-';
      p = skip_space(src, p + 1);
    } else if (!first) {
      break;
    }
    if (!detail::term_starts_at(src, p))
      throw SyntaxError(p, {"number", "unit e0..e7"});

    S coeff(1);
    if (detail::is_digit(src, p)) {
      const std::size_t start = p;
      auto digits = [&] {
        while (detail::is_digit(src, p)) ++p;
      };
      auto decimal = [&] {
        digits();
        if (p < src.size() && src[p] == '.' && detail::is_digit(src, p + 1)) {
          ++p;
          digits();
        }
      };
      decimal();
      if (p < src.size() && src[p] == '/') {
        ++p;
        if (!detail::is_digit(src, p)) throw SyntaxError(p, {"denominator digits"});
        decimal();
      }
      try {
        coeff = ScalarTraits<S>::parse(src.substr(start, p - start));
      } catch (const Error& e) {
        throw SyntaxError(start, {}, e.what());
      }
    }
    std::size_t k = 0;
    const std::size_t q = skip_space(src, p);
    if (auto u = detail::unit_at(src, q)) {
      k = static_cast<std::size_t>(*u);
      p = q + 2;
    }
    acc[k] = negative ? acc[k] - coeff : acc[k] + coeff;
    ++terms;
    first = false;
    pos = p;
    last_end = p;
  }
  return LiteralScan<S>{Octonion<S>(acc), last_end, terms};
}

/// Parses a complete human-form octonion; trailing input is an error.
template <Scalar S>
Octonion<S> parse_octonion(std::string_view text) {
  auto scan = scan_literal<S>(text, 0);
  if (!scan) throw SyntaxError(detail::skip_space(text, 0), {"number", "unit e0..e7", "sign"});
  const std::size_t end = detail::skip_space(text, scan->end);
  if (end != text.size()) throw SyntaxError(end, {"+", "-", "end of input"});
  return scan->value;
}

/// Parses the machine form (eight comma-separated coefficients, each
/// optionally signed).
template <Scalar S>
Octonion<S> parse_machine(std::string_view text) {
  std::array<S, 8> c{};
  std::size_t k = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view field =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (k >= 8) throw InvalidArgument("machine octonion has more than 8 fields");
    bool negative = false;
    if (!field.empty() && (field.front() == '-' || field.front() == '+')) {
      negative = field.front() == '-';
      field.remove_prefix(1);
    }
    const S v = ScalarTraits<S>::parse(field);
    c[k++] = negative ? -v : v;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (k != 8) throw InvalidArgument("machine octonion needs 8 fields, got " + std::to_string(k));
  return Octonion<S>(c);
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const Octonion<S>& x) {
  return os << to_text(x);
}

}  // namespace octo

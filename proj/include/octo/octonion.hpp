#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include "octo/error.hpp"
#include "octo/scalar.hpp"

namespace octo {

namespace detail {

// Cayley–Dickson doubling over arrays of length N = 2^k. An element is the
// pair (a, b) of its two halves, and
//   (a, b)(c, d) = (ac - conj(d) b, da + b conj(c)).
// Applied reals -> complex -> quaternions -> octonions.

template <class T, std::size_t N>
constexpr std::array<T, N> cd_conjugate(const std::array<T, N>& x) {
  std::array<T, N> r = x;
  for (std::size_t i = 1; i < N; ++i) r[i] = -r[i];
  return r;
}

template <class T, std::size_t N>
constexpr std::array<T, N> cd_product(const std::array<T, N>& x, const std::array<T, N>& y) {
  if constexpr (N == 1) {
    return {x[0] * y[0]};
  } else {
    constexpr std::size_t H = N / 2;
    std::array<T, H> a{}, b{}, c{}, d{};
    for (std::size_t i = 0; i < H; ++i) {
      a[i] = x[i];
      b[i] = x[i + H];
      c[i] = y[i];
      d[i] = y[i + H];
    }
    const auto ac = cd_product(a, c);
    const auto db = cd_product(cd_conjugate(d), b);
    const auto da = cd_product(d, a);
    const auto bc = cd_product(b, cd_conjugate(c));
    std::array<T, N> r{};
    for (std::size_t i = 0; i < H; ++i) {
      r[i] = ac[i] - db[i];
      r[i + H] = da[i] + bc[i];
    }
    return r;
  }
}

}  // namespace detail

/// e_i e_j = sign * e_index.
struct UnitProduct {
  int sign;
  int index;

  friend constexpr bool operator==(const UnitProduct&, const UnitProduct&) = default;
};

using MultiplicationTable = std::array<std::array<UnitProduct, 8>, 8>;

/// Basis multiplication table obtained by running the doubling formula on
/// every pair of basis units.
constexpr MultiplicationTable derive_multiplication_table() {
  MultiplicationTable table{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      std::array<int, 8> ei{}, ej{};
      ei[i] = 1;
      ej[j] = 1;
      const auto p = detail::cd_product(ei, ej);
      for (int k = 0; k < 8; ++k)
        if (p[k] != 0) table[i][j] = UnitProduct{p[k], k};
    }
  }
  return table;
}

inline constexpr MultiplicationTable kMultiplicationTable = derive_multiplication_table();

static_assert(kMultiplicationTable[1][2] == UnitProduct{1, 3});
static_assert(kMultiplicationTable[1][4] == UnitProduct{1, 5});
static_assert(kMultiplicationTable[1][6] == UnitProduct{-1, 7});
static_assert(kMultiplicationTable[5][5] == UnitProduct{-1, 0});

/// Element of the octonion algebra: c[0] + c[1] e1 + ... + c[7] e7.
template <Scalar S>
class Octonion {
 public:
  using scalar_type = S;
  static constexpr std::size_t dimension = 8;

  Octonion() : c_{} {}
  Octonion(const S& real) : c_{} { c_[0] = real; }  // NOLINT: reals embed into the algebra

  explicit Octonion(const std::array<S, 8>& coeffs) : c_(coeffs) {}

  explicit Octonion(std::span<const S> coeffs) : c_{} {
    if (coeffs.size() != dimension)
      throw InvalidArgument("octonion needs 8 coefficients, got " + std::to_string(coeffs.size()));
    for (std::size_t i = 0; i < dimension; ++i) c_[i] = coeffs[i];
  }

  Octonion(std::initializer_list<S> coeffs)
      : Octonion(std::span<const S>(coeffs.begin(), coeffs.size())) {}

  /// Basis unit e_k; e_0 is 1.
  static Octonion unit(std::size_t k) {
    if (k >= dimension) throw OutOfRange("unit index " + std::to_string(k) + " not in 0..7");
    Octonion r;
    r.c_[k] = S(1);
    return r;
  }

  const S& operator[](std::size_t i) const { return c_[i]; }
  const S& real() const { return c_[0]; }
  const std::array<S, 8>& coefficients() const noexcept { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!ScalarTraits<S>::is_zero(v)) return false;
    return true;
  }

  bool is_real() const {
    for (std::size_t i = 1; i < dimension; ++i)
      if (!ScalarTraits<S>::is_zero(c_[i])) return false;
    return true;
  }

  friend Octonion operator+(const Octonion& x, const Octonion& y) {
    Octonion r;
    for (std::size_t i = 0; i < dimension; ++i) r.c_[i] = x.c_[i] + y.c_[i];
    return r;
  }

  friend Octonion operator-(const Octonion& x, const Octonion& y) {
    Octonion r;
    for (std::size_t i = 0; i < dimension; ++i) r.c_[i] = x.c_[i] - y.c_[i];
    return r;
  }

  Octonion operator-() const {
    Octonion r;
    for (std::size_t i = 0; i < dimension; ++i) r.c_[i] = -c_[i];
    return r;
  }

  /// Scalar multiple.
  Octonion scaled(const S& s) const {
    Octonion r;
    for (std::size_t i = 0; i < dimension; ++i) r.c_[i] = c_[i] * s;
    return r;
  }

  /// Octonion product, neither commutative nor associative.
  friend Octonion operator*(const Octonion& x, const Octonion& y) {
    if constexpr (!ScalarTraits<S>::exact) return compensated_product(x, y);
    std::array<S, 8> acc{};
    for (std::size_t i = 0; i < dimension; ++i) {
      if (ScalarTraits<S>::is_zero(x.c_[i])) continue;
      for (std::size_t j = 0; j < dimension; ++j) {
        if (ScalarTraits<S>::is_zero(y.c_[j])) continue;
        const UnitProduct u = kMultiplicationTable[i][j];
        const S term = x.c_[i] * y.c_[j];
        if (u.sign > 0)
          acc[u.index] = acc[u.index] + term;
        else
          acc[u.index] = acc[u.index] - term;
      }
    }
    return Octonion(acc);
  }

 private:
  // Each component is a signed dot product of eight terms; accumulate it with
  // an fma-captured product error and a TwoSum-captured addition error so the
  // result is close to correctly rounded.
  static Octonion compensated_product(const Octonion& x, const Octonion& y) {
    std::array<S, 8> sum{}, err{};
    for (std::size_t i = 0; i < dimension; ++i) {
      for (std::size_t j = 0; j < dimension; ++j) {
        const UnitProduct u = kMultiplicationTable[i][j];
        S p = x.c_[i] * y.c_[j];
        S pe = std::fma(x.c_[i], y.c_[j], -p);
        if (u.sign < 0) {
          p = -p;
          pe = -pe;
        }
        S& s = sum[u.index];
        const S t = s + p;
        const S z = t - s;
        err[u.index] += (s - (t - z)) + (p - z) + pe;
        s = t;
      }
    }
    for (std::size_t k = 0; k < dimension; ++k) sum[k] += err[k];
    return Octonion(sum);
  }

 public:

  /// Structural equality; exact on the rational backend.
  friend bool operator==(const Octonion& x, const Octonion& y) { return x.c_ == y.c_; }

 private:
  std::array<S, 8> c_;
};

template <Scalar S>
Octonion<S> multiply(const Octonion<S>& x, const Octonion<S>& y) {
  return x * y;
}

template <Scalar S>
Octonion<S> conjugate(const Octonion<S>& x) {
  std::array<S, 8> c = x.coefficients();
  for (std::size_t i = 1; i < 8; ++i) c[i] = -c[i];
  return Octonion<S>(c);
}

template <Scalar S>
S norm_sq(const Octonion<S>& x) {
  S sum{};
  for (const auto& v : x.coefficients()) sum = sum + v * v;
  return sum;
}

/// conj(x) / norm_sq(x). `operand` names x in the error message.
template <Scalar S>
Octonion<S> inverse(const Octonion<S>& x, std::string_view operand = "operand") {
  if (x.is_zero())
    throw ZeroDivision("inverse of zero octonion (" + std::string(operand) + ")");
  const S n = norm_sq(x);
  std::array<S, 8> c = x.coefficients();
  c[0] = c[0] / n;
  for (std::size_t i = 1; i < 8; ++i) c[i] = -c[i] / n;
  return Octonion<S>(c);
}

/// Componentwise comparison. The exact backend accepts only tolerance 0 and
/// compares structurally; the float backend compares max |x_i - y_i| <= tolerance.
template <Scalar S>
bool equals(const Octonion<S>& x, const Octonion<S>& y, const S& tolerance) {
  if constexpr (ScalarTraits<S>::exact) {
    if (!ScalarTraits<S>::is_zero(tolerance))
      throw InvalidTolerance("exact backend requires tolerance 0");
    return x == y;
  } else {
    if (!(tolerance >= S(0))) throw InvalidTolerance("tolerance must be non-negative");
    for (std::size_t i = 0; i < 8; ++i)
      if (!(ScalarTraits<S>::abs(x[i] - y[i]) <= tolerance)) return false;
    return true;
  }
}

using ExactOctonion = Octonion<Rational>;
using FloatOctonion = Octonion<double>;

}  // namespace octo

#pragma once

#include <cstdint>
#include <random>

#include "octo/octonion.hpp"

namespace octo {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Seeded source of small random octonions: each coefficient is p/q with
/// p uniform in [-9, 9] and q uniform in [1, 9]. The same seed yields the
/// same stream on every run; the float backend draws the same rationals and
/// rounds them.
class RandomOctonions {
 public:
  explicit RandomOctonions(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Integer uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  template <Scalar S>
  S scalar() {
    const std::int64_t p = uniform(-9, 9);
    const std::int64_t q = uniform(1, 9);
    return ScalarTraits<S>::from_ratio(p, q);
  }

  template <Scalar S>
  Octonion<S> any() {
    std::array<S, 8> c{};
    for (auto& v : c) v = scalar<S>();
    return Octonion<S>(c);
  }

  /// Redraws until the result is nonzero.
  template <Scalar S>
  Octonion<S> nonzero() {
    while (true) {
      auto x = any<S>();
      if (!x.is_zero()) return x;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace octo

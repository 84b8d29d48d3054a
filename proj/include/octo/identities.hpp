#pragma once

// Randomized verification of the algebraic identities the library promises.
// Each identity draws its own seeded stream, so reports are reproducible and
// independent of which other identities run.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "octo/associator.hpp"
#include "octo/octonion.hpp"
#include "octo/product_tree.hpp"
#include "octo/random.hpp"

namespace octo {

struct IdentityReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;

  bool passed() const noexcept { return failures == 0; }
};

template <Scalar S>
struct Identity {
  std::string name;
  std::function<bool(RandomOctonions&, const S& tolerance)> holds;
};

/// Two-generator word of random length in [1, max_length].
template <Scalar S>
Word<S> random_word(RandomOctonions& rng, std::size_t max_length = 8) {
  static constexpr Letter letters[] = {Letter::x,     Letter::y,     Letter::conj_x, Letter::conj_y,
                                       Letter::inv_x, Letter::inv_y, Letter::real};
  const auto len = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_length)));
  Word<S> w;
  for (std::size_t k = 0; k < len; ++k) {
    const Letter l = letters[rng.uniform(0, 6)];
    WordSymbol<S> s{l, S{}};
    if (l == Letter::real) s.real = rng.scalar<S>();
    w.push_back(s);
  }
  return w;
}

template <Scalar S>
std::vector<Identity<S>> standard_identities() {
  using O = Octonion<S>;
  const O one(S(1));
  std::vector<Identity<S>> ids;

  ids.push_back({"eq2", [](RandomOctonions& r, const S& tol) {
                   const O x = r.nonzero<S>(), y = r.nonzero<S>(), z = r.nonzero<S>();
                   return equals(((x * y) * z) * multiplicative_associator(x, y, z), x * (y * z), tol);
                 }});
  ids.push_back({"eq3", [](RandomOctonions& r, const S& tol) {
                   const O x = r.nonzero<S>(), y = r.nonzero<S>(), z = r.nonzero<S>();
                   return equals((x * y) * z,
                                 (x * (y * z)) * conjugate(multiplicative_associator(x, y, z)), tol);
                 }});
  ids.push_back({"eq4", [](RandomOctonions& r, const S& tol) {
                   const O x = r.nonzero<S>(), y = r.nonzero<S>(), z = r.nonzero<S>();
                   return equals(inverse((x * y) * z), inverse(z) * (inverse(y) * inverse(x)), tol);
                 }});
  ids.push_back({"associator-forms", [](RandomOctonions& r, const S& tol) {
                   const O x = r.nonzero<S>(), y = r.nonzero<S>(), z = r.nonzero<S>();
                   return equals(multiplicative_associator(x, y, z),
                                 inverse((x * y) * z) * (x * (y * z)), tol);
                 }});
  ids.push_back({"associator-unit-norm", [](RandomOctonions& r, const S& tol) {
                   const O x = r.nonzero<S>(), y = r.nonzero<S>(), z = r.nonzero<S>();
                   return equals(O(norm_sq(multiplicative_associator(x, y, z))), O(S(1)), tol);
                 }});
  ids.push_back({"commutator-unit-norm", [](RandomOctonions& r, const S& tol) {
                   const O x = r.nonzero<S>(), y = r.nonzero<S>();
                   return equals(O(norm_sq(multiplicative_commutator(x, y))), O(S(1)), tol);
                 }});
  ids.push_back({"commutator-contract", [](RandomOctonions& r, const S& tol) {
                   const O x = r.nonzero<S>(), y = r.nonzero<S>();
                   const O c = multiplicative_commutator(x, y);
                   return equals((x * y) * c, y * x, tol) &&
                          equals(x * y, (y * x) * conjugate(c), tol);
                 }});
  ids.push_back({"associator-duality", [one](RandomOctonions& r, const S& tol) {
                   const O x = r.nonzero<S>(), y = r.nonzero<S>();
                   // Half the cases stay inside the subalgebra generated by x and y.
                   O z = r.uniform(0, 1) ? r.nonzero<S>() : x * y + O(r.scalar<S>());
                   if (z.is_zero()) z = one;
                   const bool additive_zero = equals(additive_associator(x, y, z), O(), tol);
                   const bool multiplicative_one = equals(multiplicative_associator(x, y, z), one, tol);
                   return additive_zero == multiplicative_one;
                 }});
  ids.push_back({"commutator-duality", [one](RandomOctonions& r, const S& tol) {
                   const O x = r.nonzero<S>();
                   O y = r.uniform(0, 1) ? r.nonzero<S>() : x * x + O(r.scalar<S>());
                   if (y.is_zero()) y = one;
                   const bool additive_zero = equals(additive_commutator(x, y), O(), tol);
                   const bool multiplicative_one = equals(multiplicative_commutator(x, y), one, tol);
                   return additive_zero == multiplicative_one;
                 }});
  ids.push_back({"schafer", [](RandomOctonions& r, const S& tol) {
                   const O a = r.any<S>(), x = r.any<S>(), y = r.any<S>(), z = r.any<S>();
                   return equals(schafer_residual(a, x, y, z), O(), tol);
                 }});
  ids.push_back({"biassociativity", [](RandomOctonions& r, const S& tol) {
                   const O x = r.nonzero<S>(), y = r.nonzero<S>();
                   const Word<S> w = random_word<S>(r);
                   const auto trees = enumerate_trees(w.size());
                   const auto& t1 = trees[static_cast<std::size_t>(
                       r.uniform(0, static_cast<std::int64_t>(trees.size()) - 1))];
                   const auto& t2 = trees[static_cast<std::size_t>(
                       r.uniform(0, static_cast<std::int64_t>(trees.size()) - 1))];
                   return biassociativity_check(x, y, w, t1, t2, tol);
                 }});
  ids.push_back({"norm-multiplicativity", [](RandomOctonions& r, const S& tol) {
                   const O x = r.any<S>(), y = r.any<S>();
                   return equals(O(norm_sq(x * y)), O(norm_sq(x) * norm_sq(y)), tol);
                 }});
  ids.push_back({"alternativity", [](RandomOctonions& r, const S& tol) {
                   const O x = r.any<S>(), y = r.any<S>();
                   return equals(x * (x * y), (x * x) * y, tol) &&
                          equals((y * x) * x, y * (x * x), tol);
                 }});
  ids.push_back({"moufang", [](RandomOctonions& r, const S& tol) {
                   const O x = r.any<S>(), y = r.any<S>(), z = r.any<S>();
                   return equals(((x * y) * x) * z, x * (y * (x * z)), tol);
                 }});
  ids.push_back({"inverse", [one](RandomOctonions& r, const S& tol) {
                   const O x = r.nonzero<S>();
                   const O xi = inverse(x);
                   return equals(x * xi, one, tol) && equals(xi * x, one, tol);
                 }});
  return ids;
}

/// Runs every standard identity on `cases` random inputs.
template <Scalar S>
std::vector<IdentityReport> run_identity_suite(std::size_t cases, std::uint64_t seed,
                                               const S& tolerance = S(0)) {
  std::vector<IdentityReport> reports;
  const auto ids = standard_identities<S>();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    RandomOctonions rng(seed + 0x9E3779B97F4A7C15ULL * (k + 1));
    IdentityReport rep{ids[k].name, cases, 0};
    for (std::size_t c = 0; c < cases; ++c)
      if (!ids[k].holds(rng, tolerance)) ++rep.failures;
    reports.push_back(rep);
  }
  return reports;
}

}  // namespace octo

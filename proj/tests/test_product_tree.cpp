#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <iostream>
#include <vector>

#include "octo/associator.hpp"
#include "octo/product_tree.hpp"
#include "octo/random.hpp"
#include "unit_oracle.hpp"

using octo::ExactOctonion;
using octo::ProductTree;
using Q = octo::Rational;

namespace {

ExactOctonion e(std::size_t k) { return ExactOctonion::unit(k); }
const ExactOctonion one(Q(1));

ProductTree L(std::size_t k) { return ProductTree::leaf(k); }
ProductTree N(ProductTree a, ProductTree b) { return ProductTree::node(std::move(a), std::move(b)); }

// C(m) = binomial(2m, m) / (m + 1), by direct multiplication.
unsigned long long catalan(unsigned m) {
  unsigned long long b = 1;
  for (unsigned k = 1; k <= m; ++k) b = b * (m + k) / k;
  return b / (m + 1);
}

// The five orders of w, x, y, z written out directly.
std::array<ProductTree, 5> four_factor_orders() {
  return {
      N(N(N(L(1), L(2)), L(3)), L(4)),  // ((wx)y)z
      N(N(L(1), L(2)), N(L(3), L(4))),  // (wx)(yz)
      N(L(1), N(L(2), N(L(3), L(4)))),  // w(x(yz))
      N(N(L(1), N(L(2), L(3))), L(4)),  // (w(xy))z
      N(L(1), N(N(L(2), L(3)), L(4))),  // w((xy)z)
  };
}

// Where each of the five listed orders sits in the canonical enumeration.
constexpr std::array<std::size_t, 5> kCanonicalIndex = {4, 2, 0, 3, 1};

}  // namespace

TEST_CASE("tree construction", "[trees]") {
  const auto t = N(N(L(1), L(2)), L(3));
  CHECK(t.leaf_count() == 3);
  CHECK(t.first() == 1);
  CHECK_FALSE(t.is_leaf());
  CHECK(t.render() == "((x1*x2)*x3)");
  const std::vector<std::string> names{"x", "y", "z"};
  CHECK(t.render(names) == "((x*y)*z)");
  CHECK(t == octo::left_comb(3));
  CHECK(t != octo::right_comb(3));
  CHECK_THROWS_AS(N(L(1), L(3)), octo::ShapeMismatch);
  CHECK_THROWS_AS(N(L(2), L(1)), octo::ShapeMismatch);
  CHECK_THROWS_AS(L(0), octo::OutOfRange);
}

TEST_CASE("enumerate_trees small cases", "[trees]") {
  const auto one_leaf = octo::enumerate_trees(1);
  REQUIRE(one_leaf.size() == 1);
  CHECK(one_leaf[0] == L(1));

  const auto three = octo::enumerate_trees(3);
  REQUIRE(three.size() == 2);
  CHECK(three[0] == octo::right_comb(3));
  CHECK(three[1] == octo::left_comb(3));

  const auto four = octo::enumerate_trees(4);
  const auto listed = four_factor_orders();
  REQUIRE(four.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) CHECK(four[kCanonicalIndex[k]] == listed[k]);

  CHECK_THROWS_AS(octo::enumerate_trees(0), octo::OutOfRange);
  CHECK_THROWS_AS(octo::enumerate_trees(13), octo::OutOfRange);
}

TEST_CASE("tree counts follow the Catalan numbers", "[trees]") {
  for (unsigned n = 1; n <= 11; ++n) {
    INFO("n = " << n);
    CHECK(octo::enumerate_trees(n).size() == catalan(n - 1));
  }
}

TEST_CASE("enumerated trees are distinct and keep factor order", "[trees]") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto trees = octo::enumerate_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      REQUIRE(trees[i].first() == 1);
      REQUIRE(trees[i].leaf_count() == n);
      for (std::size_t j = i + 1; j < trees.size(); ++j) REQUIRE(trees[i] != trees[j]);
    }
  }
}

TEST_CASE("evaluate", "[trees]") {
  octo::RandomOctonions rng(41);
  const auto x = rng.any<Q>();
  CHECK(evaluate(L(1), std::vector{x}) == x);

  const std::vector<ExactOctonion> f{e(1), e(2), e(4)};
  CHECK(evaluate(octo::left_comb(3), f) == e(7));
  CHECK(evaluate(octo::right_comb(3), f) == -e(7));

  for (const auto& t : octo::enumerate_trees(6))
    REQUIRE(evaluate(t, std::vector<ExactOctonion>(6, one)) == one);

  CHECK_THROWS_AS(evaluate(octo::left_comb(2), f), octo::ShapeMismatch);
}

TEST_CASE("generalized associator", "[trees]") {
  octo::RandomOctonions rng(42);
  for (int k = 0; k < 50; ++k) {
    const std::vector<ExactOctonion> f{rng.nonzero<Q>(), rng.nonzero<Q>(), rng.nonzero<Q>()};
    // Index 1 is ((x1 x2) x3), index 0 is (x1 (x2 x3)).
    REQUIRE(octo::generalized_associator(1, 0, f) ==
            octo::multiplicative_associator(f[0], f[1], f[2]));
    REQUIRE(octo::generalized_associator(0, 0, f) == one);
    REQUIRE(octo::generalized_associator(1, 1, f) == one);
  }

  const std::vector<ExactOctonion> f4{rng.nonzero<Q>(), rng.nonzero<Q>(), rng.nonzero<Q>(),
                                      rng.nonzero<Q>()};
  const auto trees = octo::enumerate_trees(4);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      REQUIRE(evaluate(trees[i], f4) * octo::generalized_associator(i, j, f4) ==
              evaluate(trees[j], f4));

  CHECK_THROWS_AS(octo::generalized_associator(5, 0, f4), octo::IndexError);
  auto with_zero = f4;
  with_zero[2] = ExactOctonion();
  CHECK_THROWS_AS(octo::generalized_associator(0, 1, with_zero), octo::ZeroDivision);
}

TEST_CASE("four-factor associators against the unit oracle", "[trees]") {
  using oracle::inv;
  using oracle::mul;
  const auto w = oracle::e(1), x = oracle::e(2), y = oracle::e(4), z = oracle::e(3);
  const std::array<oracle::Unit, 5> p = {
      mul(mul(mul(w, x), y), z), mul(mul(w, x), mul(y, z)), mul(w, mul(x, mul(y, z))),
      mul(mul(w, mul(x, y)), z), mul(w, mul(mul(x, y), z)),
  };
  const std::vector<ExactOctonion> f{e(1), e(2), e(4), e(3)};
  const auto m = octo::associator_matrix(f);
  REQUIRE(m.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const auto expected = oracle::to_octonion<Q>(mul(inv(p[i]), p[j]));
      const std::size_t ci = kCanonicalIndex[i], cj = kCanonicalIndex[j];
      REQUIRE(m(ci, cj) == expected);
      REQUIRE(octo::generalized_associator(ci, cj, f) == expected);
      REQUIRE(m(cj, ci) == conjugate(m(ci, cj)));
    }
  }
}

TEST_CASE("associator matrix examples", "[trees][matrix]") {
  const auto reals = octo::associator_matrix(
      std::vector<ExactOctonion>{ExactOctonion(Q(2)), ExactOctonion(Q(-1, 3)), ExactOctonion(Q(5)),
                                 ExactOctonion(Q(7, 2))});
  for (std::size_t i = 0; i < reals.size(); ++i)
    for (std::size_t j = 0; j < reals.size(); ++j) CHECK(reals(i, j) == one);

  const auto quaternion = octo::associator_matrix(std::vector<ExactOctonion>{e(1), e(2), e(3)});
  REQUIRE(quaternion.size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(quaternion(i, j) == one);

  const auto m = octo::associator_matrix(std::vector<ExactOctonion>{e(1), e(2), e(4)});
  CHECK(m(0, 0) == one);
  CHECK(m(0, 1) == -one);
  CHECK(m(1, 0) == -one);
  CHECK(m(1, 1) == one);

  CHECK_THROWS_AS(octo::associator_matrix(std::vector<ExactOctonion>(9, one)), octo::OutOfRange);
  CHECK_THROWS_AS(octo::associator_matrix(std::vector<ExactOctonion>{}), octo::OutOfRange);
  CHECK_THROWS_AS(octo::associator_matrix(std::vector<ExactOctonion>{one, ExactOctonion()}),
                  octo::ZeroDivision);
}

TEST_CASE("associator matrix invariants", "[trees][matrix][property]") {
  octo::RandomOctonions rng(43);
  for (std::size_t n : {3, 4, 5}) {
    for (int k = 0; k < 10; ++k) {
      std::vector<ExactOctonion> f;
      for (std::size_t i = 0; i < n; ++i) f.push_back(rng.nonzero<Q>());
      const auto m = octo::associator_matrix(f);
      REQUIRE(has_unit_diagonal(m));
      REQUIRE(is_conjugate_symmetric(m));
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) REQUIRE(norm_sq(m(i, j)) == Q(1));
    }
  }
}

TEST_CASE("quaternion factors give an all-ones matrix", "[trees][matrix][property]") {
  octo::RandomOctonions rng(44);
  for (int k = 0; k < 10; ++k) {
    std::vector<ExactOctonion> f;
    for (int i = 0; i < 4; ++i) {
      auto r = rng.nonzero<Q>();
      // Project onto span{1, e1, e2, e3}.
      std::array<Q, 8> c{};
      for (int t = 0; t < 4; ++t) c[t] = r[t];
      ExactOctonion q(c);
      f.push_back(q.is_zero() ? one : q);
    }
    const auto m = octo::associator_matrix(f);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) REQUIRE(m(i, j) == one);
  }
}

TEST_CASE("matrix entries follow the definition; chain composition is only reported",
          "[trees][matrix]") {
  octo::RandomOctonions rng(45);
  std::size_t chains = 0, chain_holds = 0;
  for (int k = 0; k < 10; ++k) {
    std::vector<ExactOctonion> f;
    for (int i = 0; i < 4; ++i) f.push_back(rng.nonzero<Q>());
    const auto m = octo::associator_matrix(f);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t kk = 0; kk < m.size(); ++kk) {
        REQUIRE(m(i, kk) == inverse(m.products[i]) * m.products[kk]);
        for (std::size_t j = 0; j < m.size(); ++j) {
          ++chains;
          if (m(i, j) * m(j, kk) == m(i, kk)) ++chain_holds;
        }
      }
    }
  }
  std::cout << "[report] a_ij * a_jk == a_ik held in " << chain_holds << " of " << chains
            << " sampled chains (n = 4)\n";
  SUCCEED();
}

#pragma once

// Parenthesizations of an n-factor product.
//
// A ProductTree is a full binary tree whose in-order leaves are the factor
// positions 1..n; it fixes the evaluation order, never the factor order.
//
// Canonical enumeration order: for n leaves, iterate the root split s = 1..n-1
// (left subtree on 1..s, right subtree on s+1..n); for each split iterate the
// left subtrees in canonical order, and for each of those the right subtrees.
// For four factors w, x, y, z this yields
//
//   index 0  w(x(yz))     index 3  (w(xy))z
//   index 1  w((xy)z)     index 4  ((wx)y)z
//   index 2  (wx)(yz)
//
// so the conventional labelling p1 = ((wx)y)z, p2 = (wx)(yz), p3 = w(x(yz)),
// p4 = (w(xy))z, p5 = w((xy)z) maps to indices 4, 2, 0, 3, 1.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "octo/error.hpp"
#include "octo/octonion.hpp"

namespace octo {

class ProductTree {
 public:
  static ProductTree leaf(std::size_t position) {
    if (position == 0) throw OutOfRange("leaf positions are 1-based");
    return ProductTree(std::make_shared<const Node>(Node{position, 1, nullptr, nullptr}));
  }

  /// Joins two trees covering adjacent position ranges.
  static ProductTree node(ProductTree left, ProductTree right) {
    if (left.first() + left.leaf_count() != right.first())
      throw ShapeMismatch("subtrees do not cover adjacent factor ranges");
    const std::size_t first = left.first();
    const std::size_t count = left.leaf_count() + right.leaf_count();
    return ProductTree(std::make_shared<const Node>(
        Node{first, count, std::move(left.node_), std::move(right.node_)}));
  }

  bool is_leaf() const noexcept { return node_->left == nullptr; }
  /// Leaf position (for a leaf) or first covered position.
  std::size_t first() const noexcept { return node_->first; }
  std::size_t leaf_count() const noexcept { return node_->count; }

  ProductTree left() const { return ProductTree(node_->left); }
  ProductTree right() const { return ProductTree(node_->right); }

  friend bool operator==(const ProductTree& a, const ProductTree& b) {
    return equal_nodes(a.node_.get(), b.node_.get());
  }

  /// Renders with factor names, e.g. `((w*x)*y)`. Names are looked up by
  /// position - 1.
  std::string render(std::span<const std::string> names) const {
    if (is_leaf()) {
      const std::size_t i = first() - 1;
      return i < names.size() ? names[i] : "x" + std::to_string(first());
    }
    return "(" + left().render(names) + "*" + right().render(names) + ")";
  }

  /// Renders with default names x1..xn.
  std::string render() const { return render(std::span<const std::string>{}); }

 private:
  struct Node {
    std::size_t first;
    std::size_t count;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit ProductTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static bool equal_nodes(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->first != b->first || a->count != b->count) return false;
    if ((a->left == nullptr) != (b->left == nullptr)) return false;
    if (a->left == nullptr) return true;
    return equal_nodes(a->left.get(), b->left.get()) && equal_nodes(a->right.get(), b->right.get());
  }

  std::shared_ptr<const Node> node_;
};

inline constexpr std::size_t kMaxEnumerateFactors = 12;
inline constexpr std::size_t kMaxMatrixFactors = 8;

namespace detail {

inline const std::vector<ProductTree>& trees_over(
    std::size_t first, std::size_t count,
    std::map<std::pair<std::size_t, std::size_t>, std::vector<ProductTree>>& memo) {
  const auto key = std::make_pair(first, count);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<ProductTree> out;
  if (count == 1) {
    out.push_back(ProductTree::leaf(first));
  } else {
    for (std::size_t s = 1; s < count; ++s) {
      const auto& lefts = trees_over(first, s, memo);
      const auto& rights = trees_over(first + s, count - s, memo);
      for (const auto& l : lefts)
        for (const auto& r : rights) out.push_back(ProductTree::node(l, r));
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace detail

/// All Catalan(n-1) trees over n leaves, in canonical order.
inline std::vector<ProductTree> enumerate_trees(std::size_t n) {
  if (n < 1 || n > kMaxEnumerateFactors)
    throw OutOfRange("factor count " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxEnumerateFactors));
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ProductTree>> memo;
  return detail::trees_over(1, n, memo);
}

/// ((x1 x2) x3) ... xn
inline ProductTree left_comb(std::size_t n) {
  if (n < 1) throw OutOfRange("tree needs at least one leaf");
  ProductTree t = ProductTree::leaf(1);
  for (std::size_t k = 2; k <= n; ++k) t = ProductTree::node(t, ProductTree::leaf(k));
  return t;
}

/// x1 (x2 ( ... (x(n-1) xn)))
inline ProductTree right_comb(std::size_t n) {
  if (n < 1) throw OutOfRange("tree needs at least one leaf");
  ProductTree t = ProductTree::leaf(n);
  for (std::size_t k = n - 1; k >= 1; --k) t = ProductTree::node(ProductTree::leaf(k), t);
  return t;
}

template <class T, class Mul>
T evaluate_with(const ProductTree& tree, std::span<const T> factors, Mul&& mul) {
  if (tree.is_leaf()) return factors[tree.first() - 1];
  return mul(evaluate_with(tree.left(), factors, mul), evaluate_with(tree.right(), factors, mul));
}

/// Product of `factors` in the evaluation order fixed by `tree`.
template <Scalar S>
Octonion<S> evaluate(const ProductTree& tree, std::span<const Octonion<S>> factors) {
  if (tree.first() != 1 || tree.leaf_count() != factors.size())
    throw ShapeMismatch("tree has " + std::to_string(tree.leaf_count()) + " leaves but " +
                        std::to_string(factors.size()) + " factors were given");
  return evaluate_with(tree, factors,
                       [](const Octonion<S>& a, const Octonion<S>& b) { return a * b; });
}

template <Scalar S>
Octonion<S> evaluate(const ProductTree& tree, const std::vector<Octonion<S>>& factors) {
  return evaluate(tree, std::span<const Octonion<S>>(factors));
}

namespace detail {

template <Scalar S>
void require_nonzero(std::span<const Octonion<S>> factors) {
  for (std::size_t k = 0; k < factors.size(); ++k)
    if (factors[k].is_zero())
      throw ZeroDivision("factor " + std::to_string(k + 1) + " is zero");
}

}  // namespace detail

/// a_ij = p_i^{-1} p_j where p_k is the product under tree k of
/// enumerate_trees(n). Indices are 0-based into the canonical list.
/// Satisfies p_i * a_ij = p_j.
template <Scalar S>
Octonion<S> generalized_associator(std::size_t i, std::size_t j,
                                   std::span<const Octonion<S>> factors) {
  const auto trees = enumerate_trees(factors.size());
  if (i >= trees.size() || j >= trees.size())
    throw IndexError("tree index out of range: there are " + std::to_string(trees.size()) +
                     " evaluation orders");
  detail::require_nonzero(factors);
  return inverse(evaluate(trees[i], factors), "p_i") * evaluate(trees[j], factors);
}

template <Scalar S>
Octonion<S> generalized_associator(std::size_t i, std::size_t j,
                                   const std::vector<Octonion<S>>& factors) {
  return generalized_associator(i, j, std::span<const Octonion<S>>(factors));
}

/// Every pairwise associator between the evaluation orders of one factor
/// sequence.
template <Scalar S>
struct AssociatorMatrix {
  std::size_t n = 0;
  std::vector<ProductTree> trees;
  std::vector<Octonion<S>> products;                // p_k, one per tree
  std::vector<std::vector<Octonion<S>>> entries;    // entries[i][j] = a_ij

  std::size_t size() const noexcept { return trees.size(); }
  const Octonion<S>& operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

template <Scalar S>
AssociatorMatrix<S> associator_matrix(std::span<const Octonion<S>> factors) {
  if (factors.empty() || factors.size() > kMaxMatrixFactors)
    throw OutOfRange("associator matrix supports 1.." + std::to_string(kMaxMatrixFactors) +
                     " factors, got " + std::to_string(factors.size()));
  detail::require_nonzero(factors);
  AssociatorMatrix<S> m;
  m.n = factors.size();
  m.trees = enumerate_trees(m.n);
  m.products.reserve(m.trees.size());
  for (const auto& t : m.trees) m.products.push_back(evaluate(t, factors));
  std::vector<Octonion<S>> inverses;
  inverses.reserve(m.products.size());
  for (const auto& p : m.products) inverses.push_back(inverse(p, "p_i"));
  m.entries.resize(m.trees.size());
  for (std::size_t i = 0; i < m.trees.size(); ++i) {
    m.entries[i].reserve(m.trees.size());
    for (std::size_t j = 0; j < m.trees.size(); ++j)
      m.entries[i].push_back(inverses[i] * m.products[j]);
  }
  return m;
}

template <Scalar S>
AssociatorMatrix<S> associator_matrix(const std::vector<Octonion<S>>& factors) {
  return associator_matrix(std::span<const Octonion<S>>(factors));
}

/// entries[i][i] = 1 for every i.
template <Scalar S>
bool has_unit_diagonal(const AssociatorMatrix<S>& m, const S& tolerance = S(0)) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!equals(m.entries[i][i], Octonion<S>(S(1)), tolerance)) return false;
  return true;
}

/// entries[j][i] = conj(entries[i][j]) for every pair.
template <Scalar S>
bool is_conjugate_symmetric(const AssociatorMatrix<S>& m, const S& tolerance = S(0)) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if (!equals(m.entries[j][i], conjugate(m.entries[i][j]), tolerance)) return false;
  return true;
}

}  // namespace octo

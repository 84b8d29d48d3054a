#pragma once

// Commutators and associators, additive and multiplicative, and the
// two-generator bi-associativity check.

#include <cctype>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "octo/error.hpp"
#include "octo/octonion.hpp"
#include "octo/octonion_io.hpp"
#include "octo/product_tree.hpp"

namespace octo {

/// [x, y] = xy - yx. Zero iff x and y commute.
template <Scalar S>
Octonion<S> additive_commutator(const Octonion<S>& x, const Octonion<S>& y) {
  return x * y - y * x;
}

/// [x, y, z] = x(yz) - (xy)z. Zero iff the triple associates.
template <Scalar S>
Octonion<S> additive_associator(const Octonion<S>& x, const Octonion<S>& y,
                                const Octonion<S>& z) {
  return x * (y * z) - (x * y) * z;
}

/// c = y^-1 x^-1 y x, evaluated as ((y^-1 x^-1) y) x. The product involves
/// only x, y and their inverses, so the grouping does not change the value.
///
/// (xy)c = yx and xy = (yx) conj(c); c has unit norm.
template <Scalar S>
Octonion<S> multiplicative_commutator(const Octonion<S>& x, const Octonion<S>& y) {
  const auto xi = inverse(x, "x");
  const auto yi = inverse(y, "y");
  return ((yi * xi) * y) * x;
}

/// a = (z^-1 (y^-1 x^-1)) (x (yz)), the unit-norm element with
/// ((xy)z) a = x(yz) and (xy)z = (x(yz)) conj(a).
///
/// The left factor is ((xy)z)^-1 written out; it is evaluated with exactly
/// this grouping rather than by inverting (xy)z.
template <Scalar S>
Octonion<S> multiplicative_associator(const Octonion<S>& x, const Octonion<S>& y,
                                      const Octonion<S>& z) {
  const auto xi = inverse(x, "x");
  const auto yi = inverse(y, "y");
  const auto zi = inverse(z, "z");
  return (zi * (yi * xi)) * (x * (y * z));
}

/// a[x,y,z] + [a,x,y]z - ([ax,y,z] - [a,xy,z] + [a,x,yz]) with additive
/// associators. Zero for every input in an alternative algebra.
template <Scalar S>
Octonion<S> schafer_residual(const Octonion<S>& a, const Octonion<S>& x, const Octonion<S>& y,
                             const Octonion<S>& z) {
  const auto lhs = a * additive_associator(x, y, z) + additive_associator(a, x, y) * z;
  const auto rhs = additive_associator(a * x, y, z) - additive_associator(a, x * y, z) +
                   additive_associator(a, x, y * z);
  return lhs - rhs;
}

enum class BracketKind {
  additive_commutator,
  additive_associator,
  multiplicative_commutator,
  multiplicative_associator,
};

inline std::string_view to_string(BracketKind k) {
  switch (k) {
    case BracketKind::additive_commutator: return "additive-commutator";
    case BracketKind::additive_associator: return "additive-associator";
    case BracketKind::multiplicative_commutator: return "multiplicative-commutator";
    case BracketKind::multiplicative_associator: return "multiplicative-associator";
  }
  return "?";
}

inline std::size_t arity(BracketKind k) {
  return k == BracketKind::additive_commutator || k == BracketKind::multiplicative_commutator ? 2
                                                                                              : 3;
}

template <Scalar S>
struct BracketResult {
  Octonion<S> value;
  BracketKind kind;
  std::vector<Octonion<S>> operands;
};

template <Scalar S>
BracketResult<S> bracket(BracketKind kind, std::span<const Octonion<S>> operands) {
  if (operands.size() != arity(kind))
    throw InvalidArgument(std::string(to_string(kind)) + " takes " + std::to_string(arity(kind)) +
                          " operands, got " + std::to_string(operands.size()));
  BracketResult<S> r{Octonion<S>(), kind, {operands.begin(), operands.end()}};
  switch (kind) {
    case BracketKind::additive_commutator:
      r.value = additive_commutator(operands[0], operands[1]);
      break;
    case BracketKind::additive_associator:
      r.value = additive_associator(operands[0], operands[1], operands[2]);
      break;
    case BracketKind::multiplicative_commutator:
      r.value = multiplicative_commutator(operands[0], operands[1]);
      break;
    case BracketKind::multiplicative_associator:
      r.value = multiplicative_associator(operands[0], operands[1], operands[2]);
      break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Two-generator words.

enum class Letter { x, y, conj_x, conj_y, inv_x, inv_y, real };

template <Scalar S>
struct WordSymbol {
  Letter letter;
  S real{};  // used when letter == Letter::real

  friend bool operator==(const WordSymbol&, const WordSymbol&) = default;
};

template <Scalar S>
using Word = std::vector<WordSymbol<S>>;

/// Parses a whitespace- or comma-separated word. Accepted symbols:
/// `X`, `Y`, `conj(X)`, `X~`, `inv(X)`, `X^-1` (same for Y), and real
/// scalars written as a signed coefficient or `scalar(c)`. Any other
/// generator is rejected: the check is a statement about two generators.
template <Scalar S>
Word<S> parse_word(std::string_view text) {
  Word<S> word;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (true) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    int depth = 0;
    while (end < text.size() && (depth > 0 || !is_sep(text[end]))) {
      if (text[end] == '(') ++depth;
      if (text[end] == ')') --depth;
      ++end;
    }
    const std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    auto generator = [&](std::string_view g) -> int {
      if (g == "X") return 0;
      if (g == "Y") return 1;
      throw InvalidArgument("word symbol '" + std::string(tok) +
                            "' is not built from the generators X and Y");
    };
    auto wrapped = [&](std::string_view prefix) -> std::string_view {
      if (tok.size() > prefix.size() + 1 && tok.substr(0, prefix.size()) == prefix &&
          tok.back() == ')')
        return tok.substr(prefix.size(), tok.size() - prefix.size() - 1);
      return {};
    };

    const char c0 = tok.front();
    if (std::isdigit(static_cast<unsigned char>(c0)) || c0 == '-' || c0 == '+' ||
        !wrapped("scalar(").empty()) {
      std::string_view num = wrapped("scalar(").empty() ? tok : wrapped("scalar(");
      bool negative = false;
      if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
      }
      const S v = ScalarTraits<S>::parse(num);
      word.push_back({Letter::real, negative ? -v : v});
    } else if (auto g = wrapped("conj("); !g.empty()) {
      word.push_back({generator(g) == 0 ? Letter::conj_x : Letter::conj_y, S{}});
    } else if (auto g2 = wrapped("inv("); !g2.empty()) {
      word.push_back({generator(g2) == 0 ? Letter::inv_x : Letter::inv_y, S{}});
    } else if (tok.size() > 1 && tok.back() == '~') {
      word.push_back(
          {generator(tok.substr(0, tok.size() - 1)) == 0 ? Letter::conj_x : Letter::conj_y, S{}});
    } else if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      word.push_back(
          {generator(tok.substr(0, tok.size() - 3)) == 0 ? Letter::inv_x : Letter::inv_y, S{}});
    } else {
      word.push_back({generator(tok) == 0 ? Letter::x : Letter::y, S{}});
    }
  }
  return word;
}

template <Scalar S>
std::string to_string(const Word<S>& word) {
  std::string out;
  for (const auto& s : word) {
    if (!out.empty()) out += ' ';
    switch (s.letter) {
      case Letter::x: out += "X"; break;
      case Letter::y: out += "Y"; break;
      case Letter::conj_x: out += "conj(X)"; break;
      case Letter::conj_y: out += "conj(Y)"; break;
      case Letter::inv_x: out += "inv(X)"; break;
      case Letter::inv_y: out += "inv(Y)"; break;
      case Letter::real: out += "scalar(" + to_text(Octonion<S>(s.real)) + ")"; break;
    }
  }
  return out;
}

/// Replaces each letter of `word` by its value for the given x and y.
template <Scalar S>
std::vector<Octonion<S>> substitute(const Word<S>& word, const Octonion<S>& x,
                                    const Octonion<S>& y) {
  std::vector<Octonion<S>> out;
  out.reserve(word.size());
  for (const auto& s : word) {
    switch (s.letter) {
      case Letter::x: out.push_back(x); break;
      case Letter::y: out.push_back(y); break;
      case Letter::conj_x: out.push_back(conjugate(x)); break;
      case Letter::conj_y: out.push_back(conjugate(y)); break;
      case Letter::inv_x: out.push_back(inverse(x, "x")); break;
      case Letter::inv_y: out.push_back(inverse(y, "y")); break;
      case Letter::real: out.push_back(Octonion<S>(s.real)); break;
    }
  }
  return out;
}

/// Evaluates the word under two parenthesizations and compares the results.
/// Always true for words over two generators.
template <Scalar S>
bool biassociativity_check(const Octonion<S>& x, const Octonion<S>& y, const Word<S>& word,
                           const ProductTree& tree1, const ProductTree& tree2,
                           const S& tolerance = S(0)) {
  if (tree1.leaf_count() != word.size() || tree2.leaf_count() != word.size())
    throw ShapeMismatch("word has " + std::to_string(word.size()) + " letters but trees have " +
                        std::to_string(tree1.leaf_count()) + " and " +
                        std::to_string(tree2.leaf_count()) + " leaves");
  const auto factors = substitute(word, x, y);
  return equals(evaluate(tree1, factors), evaluate(tree2, factors), tolerance);
}

}  // namespace octo

#pragma once

// Parenthesized octonion expressions.
//
//   expression := term ('*' term)*
//   term       := atom postfix*
//   postfix    := '~' | '^-1'
//   atom       := literal | identifier | '(' expression ')'
//
// Literals use the human octonion text form (see octonion_io.hpp). Chains of
// three or more unparenthesized factors group to the left; such products are
// flagged so callers can warn about the implicit grouping.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "octo/error.hpp"
#include "octo/octonion.hpp"
#include "octo/octonion_io.hpp"

namespace octo {

template <Scalar S>
struct ExprNode;
template <Scalar S>
struct ExprLiteral;
struct ExprVar {
  std::string name;
};
template <Scalar S>
struct ExprProduct;
template <Scalar S>
struct ExprConj;
template <Scalar S>
struct ExprInv;

/// Immutable expression tree; copies share structure.
template <Scalar S>
class Expr {
 public:
  using Literal = ExprLiteral<S>;
  using Var = ExprVar;
  using Product = ExprProduct<S>;
  using Conj = ExprConj<S>;
  using Inv = ExprInv<S>;
  using Variant = std::variant<Literal, Var, Product, Conj, Inv>;

  static Expr literal(Octonion<S> v) { return Expr(Literal{std::move(v)}); }
  static Expr var(std::string name) { return Expr(Var{std::move(name)}); }
  static Expr product(Expr l, Expr r, std::size_t chain_position = 0) {
    return Expr(Product{std::move(l), std::move(r), chain_position});
  }
  static Expr conj(Expr e) { return Expr(Conj{std::move(e)}); }
  static Expr inv(Expr e) { return Expr(Inv{std::move(e)}); }

  const Variant& node() const { return node_->v; }

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node_->v);
  }

  /// Structural equality. The implicit-grouping flag is ignored, so
  /// `x*y*z` and `(x*y)*z` compare equal.
  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.node().index() != b.node().index()) return false;
    if (auto p = a.template as<Literal>()) return p->value == b.template as<Literal>()->value;
    if (auto p = a.template as<Var>()) return p->name == b.template as<Var>()->name;
    if (auto p = a.template as<Product>()) {
      auto q = b.template as<Product>();
      return p->left == q->left && p->right == q->right;
    }
    if (auto p = a.template as<Conj>()) return p->inner == b.template as<Conj>()->inner;
    return a.template as<Inv>()->inner == b.template as<Inv>()->inner;
  }

 private:
  template <class Node>
  explicit Expr(Node n) : node_(std::make_shared<const ExprNode<S>>(ExprNode<S>{std::move(n)})) {}

  std::shared_ptr<const ExprNode<S>> node_;
};

template <Scalar S>
struct ExprLiteral {
  Octonion<S> value;
};

template <Scalar S>
struct ExprProduct {
  Expr<S> left;
  Expr<S> right;
  // 0 for an explicit product. Otherwise this node joins operands 0..k of an
  // unparenthesized chain and chain_position == k.
  std::size_t chain_position = 0;

  bool defaulted() const noexcept { return chain_position != 0; }
};

template <Scalar S>
struct ExprConj {
  Expr<S> inner;
};

template <Scalar S>
struct ExprInv {
  Expr<S> inner;
};

template <Scalar S>
struct ExprNode {
  typename Expr<S>::Variant v;
};

/// Variable bindings. Names match [a-zA-Z][a-zA-Z0-9_]* and may not be one
/// of the unit names e0..e7.
template <Scalar S>
class Environment {
 public:
  static void validate_identifier(std::string_view name) {
    bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name.front()));
    for (char c : name) ok = ok && detail::is_ident_char(c);
    if (!ok) throw InvalidArgument("'" + std::string(name) + "' is not a valid identifier");
    if (name.size() == 2 && name[0] == 'e' && name[1] >= '0' && name[1] <= '7')
      throw ReservedIdentifier(std::string(name));
  }

  void bind(const std::string& name, Octonion<S> value) {
    validate_identifier(name);
    bindings_.insert_or_assign(name, std::move(value));
  }

  const Octonion<S>* lookup(const std::string& name) const {
    auto it = bindings_.find(name);
    return it == bindings_.end() ? nullptr : &it->second;
  }

  const std::map<std::string, Octonion<S>>& bindings() const noexcept { return bindings_; }

 private:
  std::map<std::string, Octonion<S>> bindings_;
};

namespace detail {

template <Scalar S>
class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : src_(src) {}

  Expr<S> parse_all() {
    Expr<S> e = expression();
    pos_ = skip_space(src_, pos_);
    if (pos_ != src_.size()) throw SyntaxError(pos_, {"*", "~", "^-1", "end of input"});
    return e;
  }

 private:
  Expr<S> expression() {
    std::vector<Expr<S>> terms;
    terms.push_back(term());
    while (true) {
      pos_ = skip_space(src_, pos_);
      if (pos_ < src_.size() && src_[pos_] == '*') {
        ++pos_;
        terms.push_back(term());
      } else {
        break;
      }
    }
    const bool defaulted = terms.size() >= 3;
    Expr<S> acc = terms[0];
    for (std::size_t k = 1; k < terms.size(); ++k)
      acc = Expr<S>::product(acc, terms[k], defaulted ? k : 0);
    return acc;
  }

  Expr<S> term() {
    Expr<S> e = atom();
    while (true) {
      pos_ = skip_space(src_, pos_);
      if (pos_ < src_.size() && src_[pos_] == '~') {
        ++pos_;
        e = Expr<S>::conj(e);
      } else if (src_.substr(pos_, 3) == "^-1") {
        pos_ += 3;
        e = Expr<S>::inv(e);
      } else if (pos_ < src_.size() && src_[pos_] == '^') {
        throw SyntaxError(pos_ + 1, {"-1"}, "only the power -1 is supported");
      } else {
        return e;
      }
    }
  }

  Expr<S> atom() {
    pos_ = skip_space(src_, pos_);
    if (pos_ < src_.size() && src_[pos_] == '(') {
      ++pos_;
      Expr<S> e = expression();
      pos_ = skip_space(src_, pos_);
      if (pos_ >= src_.size() || src_[pos_] != ')')
        throw SyntaxError(pos_, {")", "*", "~", "^-1"});
      ++pos_;
      return e;
    }
    if (auto lit = scan_literal<S>(src_, pos_)) {
      pos_ = lit->end;
      return Expr<S>::literal(lit->value);
    }
    if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
      return Expr<S>::var(std::string(src_.substr(start, pos_ - start)));
    }
    throw SyntaxError(pos_, {"(", "identifier", "number", "unit e0..e7", "sign"});
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <Scalar S>
Expr<S> parse(std::string_view source) {
  return detail::ExprParser<S>(source).parse_all();
}

/// Fully parenthesized text that parses back to an equal Expr.
template <Scalar S>
std::string render(const Expr<S>& e) {
  using E = Expr<S>;
  if (auto p = e.template as<typename E::Literal>()) {
    std::string t = to_text(p->value);
    if (t.find(' ') != std::string::npos || t.front() == '-') t = "(" + t + ")";
    return t;
  }
  if (auto p = e.template as<typename E::Var>()) return p->name;
  if (auto p = e.template as<typename E::Product>())
    return "(" + render(p->left) + "*" + render(p->right) + ")";
  if (auto p = e.template as<typename E::Conj>()) return render(p->inner) + "~";
  return render(e.template as<typename E::Inv>()->inner) + "^-1";
}

template <Scalar S>
Octonion<S> eval_expr(const Expr<S>& e, const Environment<S>& env) {
  using E = Expr<S>;
  if (auto p = e.template as<typename E::Literal>()) return p->value;
  if (auto p = e.template as<typename E::Var>()) {
    if (const auto* v = env.lookup(p->name)) return *v;
    throw UnboundVariable(p->name);
  }
  if (auto p = e.template as<typename E::Product>())
    return eval_expr(p->left, env) * eval_expr(p->right, env);
  if (auto p = e.template as<typename E::Conj>()) return conjugate(eval_expr(p->inner, env));
  const auto& inner = e.template as<typename E::Inv>()->inner;
  return inverse(eval_expr(inner, env), render(inner));
}

/// True if any product in `e` relied on the left-associative default.
template <Scalar S>
bool has_defaulted_associativity(const Expr<S>& e) {
  using E = Expr<S>;
  if (auto p = e.template as<typename E::Product>())
    return p->defaulted() || has_defaulted_associativity(p->left) ||
           has_defaulted_associativity(p->right);
  if (auto p = e.template as<typename E::Conj>()) return has_defaulted_associativity(p->inner);
  if (auto p = e.template as<typename E::Inv>()) return has_defaulted_associativity(p->inner);
  return false;
}

/// One unparenthesized chain, evaluated both as the default left grouping
/// and as the right grouping.
template <Scalar S>
struct AssociativityWarning {
  std::string left_form;
  std::string right_form;
  Octonion<S> left_value;
  Octonion<S> right_value;
  bool differs = false;

  std::string message() const {
    std::string m = "warning: unparenthesized product evaluated as " + left_form;
    if (differs)
      m += " = " + to_text(left_value) + ", but " + right_form + " = " + to_text(right_value);
    else
      m += "; " + right_form + " gives the same value here";
    return m;
  }
};

namespace detail {

template <Scalar S>
void collect_warnings(const Expr<S>& e, const Environment<S>& env, const S& tolerance,
                      std::vector<AssociativityWarning<S>>& out) {
  using E = Expr<S>;
  if (auto p = e.template as<typename E::Product>()) {
    if (!p->defaulted()) {
      collect_warnings(p->left, env, tolerance, out);
      collect_warnings(p->right, env, tolerance, out);
      return;
    }
    // Unwind the chain's left spine back to its first operand.
    std::vector<Expr<S>> operands;
    const typename E::Product* cur = p;
    while (true) {
      operands.push_back(cur->right);
      if (cur->chain_position == 1) {
        operands.push_back(cur->left);
        break;
      }
      cur = cur->left.template as<typename E::Product>();
    }
    std::reverse(operands.begin(), operands.end());

    std::vector<Octonion<S>> values;
    std::vector<std::string> texts;
    for (const auto& op : operands) {
      values.push_back(eval_expr(op, env));
      texts.push_back(render(op));
    }
    AssociativityWarning<S> w;
    w.left_form = texts[0];
    w.left_value = values[0];
    for (std::size_t k = 1; k < values.size(); ++k) {
      w.left_form = "(" + w.left_form + "*" + texts[k] + ")";
      w.left_value = w.left_value * values[k];
    }
    w.right_form = texts.back();
    w.right_value = values.back();
    for (std::size_t k = values.size() - 1; k-- > 0;) {
      w.right_form = "(" + texts[k] + "*" + w.right_form + ")";
      w.right_value = values[k] * w.right_value;
    }
    w.differs = !equals(w.left_value, w.right_value, tolerance);
    out.push_back(std::move(w));
    for (const auto& op : operands) collect_warnings(op, env, tolerance, out);
    return;
  }
  if (auto p = e.template as<typename E::Conj>()) return collect_warnings(p->inner, env, tolerance, out);
  if (auto p = e.template as<typename E::Inv>()) return collect_warnings(p->inner, env, tolerance, out);
}

}  // namespace detail

/// Warnings for every chain in `e` that relied on the default grouping,
/// outermost first. Evaluates the chain operands in `env`.
template <Scalar S>
std::vector<AssociativityWarning<S>> associativity_warnings(const Expr<S>& e,
                                                            const Environment<S>& env,
                                                            const S& tolerance = S(0)) {
  std::vector<AssociativityWarning<S>> out;
  detail::collect_warnings(e, env, tolerance, out);
  return out;
}

}  // namespace octo

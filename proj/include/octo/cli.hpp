#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and returns the process exit code:
//   0 success, 1 usage error, 2 evaluation error, 3 identity-check failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "octo/associator.hpp"
#include "octo/error.hpp"
#include "octo/expr.hpp"
#include "octo/identities.hpp"
#include "octo/octonion_io.hpp"
#include "octo/product_tree.hpp"

namespace octo::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kEvaluation = 2,
  kIdentityFailure = 3,
};

inline constexpr double kDefaultFloatTolerance = 1e-12;
// Identity sweeps compose four random factors (Schafer has terms near 10^3),
// so 1e-12 is only a few ulp there; the sweep default is looser.
inline constexpr double kDefaultFloatCheckTolerance = 1e-9;

struct Options {
  std::string backend = "exact";
  std::optional<double> tolerance;
  std::string format = "text";

  std::string expression;
  std::vector<std::string> lets;
  std::vector<std::string> operands;
  bool additive = false;
  bool multiplicative = false;
  bool matrix = false;
  std::size_t cases = 100;
  std::uint64_t seed = kDefaultSeed;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

template <Scalar S>
class Runner {
 public:
  Runner(const Options& opts, std::ostream& out, std::ostream& err)
      : opts_(opts), out_(out), err_(err), tolerance_(resolve_tolerance(opts)) {}

  int eval() {
    Environment<S> env;
    for (const auto& let : opts_.lets) {
      const auto eq = let.find('=');
      if (eq == std::string::npos) throw UsageError("--let expects name=value, got '" + let + "'");
      const std::string name = let.substr(0, eq);
      env.bind(name, eval_expr(parse<S>(let.substr(eq + 1)), env));
    }
    const auto expr = parse<S>(opts_.expression);
    const auto value = eval_expr(expr, env);
    for (const auto& w : associativity_warnings(expr, env, tolerance_)) err_ << w.message() << '\n';
    if (machine())
      out_ << "value\t" << to_machine(value) << '\n';
    else
      out_ << to_text(value) << '\n';
    return kSuccess;
  }

  int commutator() {
    const auto xs = operands(2);
    const Octonion<S>& x = xs[0];
    const Octonion<S>& y = xs[1];
    if (opts_.additive) {
      print_value(BracketKind::additive_commutator, additive_commutator(x, y));
      return kSuccess;
    }
    const auto c = multiplicative_commutator(x, y);
    print_value(BracketKind::multiplicative_commutator, c);
    const bool forward = equals((x * y) * c, y * x, tolerance_);
    const bool reverse = equals(x * y, (y * x) * conjugate(c), tolerance_);
    print_checks({{"Forward", "forward", forward}, {"Reverse", "reverse", reverse}});
    return forward && reverse ? kSuccess : kIdentityFailure;
  }

  int associator() {
    const auto xs = operands(3);
    const Octonion<S>& x = xs[0];
    const Octonion<S>& y = xs[1];
    const Octonion<S>& z = xs[2];
    if (opts_.additive) {
      print_value(BracketKind::additive_associator, additive_associator(x, y, z));
      return kSuccess;
    }
    const auto a = multiplicative_associator(x, y, z);
    print_value(BracketKind::multiplicative_associator, a);
    const bool eq2 = equals(((x * y) * z) * a, x * (y * z), tolerance_);
    const bool eq3 = equals((x * y) * z, (x * (y * z)) * conjugate(a), tolerance_);
    print_checks({{"Eq2", "eq2", eq2}, {"Eq3", "eq3", eq3}});
    return eq2 && eq3 ? kSuccess : kIdentityFailure;
  }

  int orders() {
    const std::size_t n = opts_.operands.size();
    if (n < 1) throw UsageError("orders needs at least one factor");
    if (n > (opts_.matrix ? kMaxMatrixFactors : kMaxEnumerateFactors))
      throw UsageError("orders supports at most " +
                       std::to_string(opts_.matrix ? kMaxMatrixFactors : kMaxEnumerateFactors) +
                       " factors" + (opts_.matrix ? " with --matrix" : ""));
    const auto factors = operands(n);
    std::vector<std::string> names;
    for (std::size_t k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));

    const auto trees = enumerate_trees(n);
    std::vector<std::string> forms;
    for (const auto& t : trees) forms.push_back(t.render(names));

    if (machine()) {
      for (std::size_t k = 0; k < n; ++k)
        out_ << "factor " << k + 1 << '\t' << to_machine(factors[k]) << '\n';
      for (std::size_t k = 0; k < trees.size(); ++k) {
        out_ << "order " << k + 1 << '\t' << forms[k] << '\n';
        out_ << "value " << k + 1 << '\t' << to_machine(evaluate(trees[k], factors)) << '\n';
      }
    } else {
      for (std::size_t k = 0; k < n; ++k) out_ << names[k] << " = " << to_text(factors[k]) << '\n';
      const std::size_t width =
          std::max_element(forms.begin(), forms.end(),
                           [](const auto& a, const auto& b) { return a.size() < b.size(); })
              ->size();
      for (std::size_t k = 0; k < trees.size(); ++k)
        out_ << pad(std::to_string(k + 1), 4) << pad(forms[k], width) << "  = "
             << to_text(evaluate(trees[k], factors)) << '\n';
    }
    if (!opts_.matrix) return kSuccess;

    const auto m = associator_matrix(factors);
    const bool diagonal = has_unit_diagonal(m, tolerance_);
    const bool symmetric = is_conjugate_symmetric(m, tolerance_);
    if (machine()) {
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
          out_ << i + 1 << ' ' << j + 1 << '\t' << to_machine(m(i, j)) << '\n';
      out_ << "unit-diagonal\t" << (diagonal ? "OK" : "FAIL") << '\n';
      out_ << "conjugate-symmetry\t" << (symmetric ? "OK" : "FAIL") << '\n';
    } else {
      out_ << '\n';
      print_matrix(m);
      out_ << "unit diagonal a[i][i] = 1: " << (diagonal ? "OK" : "FAIL") << '\n';
      out_ << "conjugate symmetry a[j][i] = conj(a[i][j]): " << (symmetric ? "OK" : "FAIL")
           << '\n';
    }
    return diagonal && symmetric ? kSuccess : kIdentityFailure;
  }

  int check() {
    if (opts_.cases == 0) throw UsageError("--cases must be positive");
    S tol = tolerance_;
    if constexpr (!ScalarTraits<S>::exact)
      if (!opts_.tolerance) tol = kDefaultFloatCheckTolerance;
    const auto reports = run_identity_suite<S>(opts_.cases, opts_.seed, tol);
    bool ok = true;
    std::size_t width = 0;
    for (const auto& r : reports) width = std::max(width, r.name.size());
    for (const auto& r : reports) {
      ok = ok && r.passed();
      if (machine()) {
        out_ << r.name << '\t' << r.cases - r.failures << '/' << r.cases << '\n';
      } else if (r.passed()) {
        out_ << pad(r.name + ":", width + 2) << "all " << r.cases << " cases passed\n";
      } else {
        out_ << pad(r.name + ":", width + 2) << r.failures << " of " << r.cases
             << " cases FAILED\n";
      }
    }
    return ok ? kSuccess : kIdentityFailure;
  }

 private:
  struct Check {
    const char* text_label;
    const char* machine_key;
    bool ok;
  };

  static S resolve_tolerance(const Options& opts) {
    if constexpr (ScalarTraits<S>::exact) {
      if (opts.tolerance && *opts.tolerance != 0.0)
        throw UsageError("--tolerance applies to the float backend only");
      return S(0);
    } else {
      const double t = opts.tolerance.value_or(kDefaultFloatTolerance);
      if (!(t >= 0.0)) throw UsageError("--tolerance must be non-negative");
      return t;
    }
  }

  bool machine() const { return opts_.format == "machine"; }

  static std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
  }

  std::vector<Octonion<S>> operands(std::size_t expected) const {
    if (opts_.operands.size() != expected)
      throw UsageError("expected " + std::to_string(expected) + " operands, got " +
                       std::to_string(opts_.operands.size()));
    Environment<S> env;
    std::vector<Octonion<S>> out;
    for (const auto& text : opts_.operands) out.push_back(eval_expr(parse<S>(text), env));
    return out;
  }

  void print_value(BracketKind kind, const Octonion<S>& v) {
    if (machine()) {
      out_ << "kind\t" << to_string(kind) << '\n';
      out_ << "value\t" << to_machine(v) << '\n';
    } else {
      out_ << to_text(v) << '\n';
    }
  }

  void print_checks(std::initializer_list<Check> checks) {
    if (machine()) {
      for (const auto& c : checks) out_ << c.machine_key << '\t' << (c.ok ? "OK" : "FAIL") << '\n';
      return;
    }
    bool first = true;
    for (const auto& c : checks) {
      if (!first) out_ << "  ";
      out_ << c.text_label << ": " << (c.ok ? "OK" : "FAIL");
      first = false;
    }
    out_ << '\n';
  }

  void print_matrix(const AssociatorMatrix<S>& m) {
    const std::size_t size = m.size();
    std::vector<std::vector<std::string>> cells(size + 1, std::vector<std::string>(size + 1));
    cells[0][0] = "a[i][j]";
    for (std::size_t k = 0; k < size; ++k) {
      cells[0][k + 1] = "j=" + std::to_string(k + 1);
      cells[k + 1][0] = "i=" + std::to_string(k + 1);
    }
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) cells[i + 1][j + 1] = to_text(m(i, j));
    std::vector<std::size_t> widths(size + 1, 0);
    for (const auto& row : cells)
      for (std::size_t c = 0; c <= size; ++c) widths[c] = std::max(widths[c], row[c].size());
    for (const auto& row : cells) {
      std::string line;
      for (std::size_t c = 0; c <= size; ++c) {
        if (c) line += "  ";
        line += pad(row[c], widths[c]);
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out_ << line << '\n';
    }
  }

  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
  S tolerance_;
};

template <Scalar S>
int dispatch(const std::string& command, const Options& opts, std::ostream& out,
             std::ostream& err) {
  Runner<S> runner(opts, out, err);
  if (command == "eval") return runner.eval();
  if (command == "commutator") return runner.commutator();
  if (command == "associator") return runner.associator();
  if (command == "orders") return runner.orders();
  return runner.check();
}

/// Runs the CLI on `args` (program name excluded).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  // Operands such as `-e1` would otherwise be read as short options. None
  // are defined apart from -h, so protect every other single-dash token
  // with a leading space, which the octonion parser ignores.
  for (auto& a : args)
    if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") a.insert(a.begin(), ' ');

  Options opts;
  CLI::App app{"Octonion commutators, associators and evaluation orders", "octo"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--backend", opts.backend, "Scalar backend")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tolerance", opts.tolerance, "Componentwise tolerance (float backend only)");
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  auto* eval = app.add_subcommand("eval", "Parse and evaluate an expression");
  eval->add_option("expr", opts.expression, "Expression, e.g. (x*y)*e4")->required();
  eval->add_option("--let", opts.lets, "Bind name=value (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  auto add_mode_flags = [&](CLI::App* sub) {
    auto* add = sub->add_flag("--additive", opts.additive, "Difference form");
    auto* mul = sub->add_flag("--multiplicative", opts.multiplicative, "Quotient form (default)");
    add->excludes(mul);
  };
  auto* comm = app.add_subcommand("commutator", "Commutator of x and y");
  comm->add_option("operands", opts.operands, "x y")->required()->expected(2);
  add_mode_flags(comm);

  auto* assoc = app.add_subcommand("associator", "Associator of x, y and z");
  assoc->add_option("operands", opts.operands, "x y z")->required()->expected(3);
  add_mode_flags(assoc);

  auto* orders = app.add_subcommand("orders", "All evaluation orders of a product");
  orders->add_option("factors", opts.operands, "x1 x2 ...")->required();
  orders->add_flag("--matrix", opts.matrix, "Also print the pairwise associator matrix");

  auto* check = app.add_subcommand("check", "Run the identity suite on random octonions");
  check->add_option("--cases", opts.cases, "Cases per identity");
  check->add_option("--seed", opts.seed, "Random seed");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (opts.backend == "float") return dispatch<double>(command, opts, out, err);
    return dispatch<Rational>(command, opts, out, err);
  } catch (const ZeroDivision& e) {
    err << "error: " << e.what() << '\n';
    return kEvaluation;
  } catch (const UnboundVariable& e) {
    err << "error: " << e.what() << '\n';
    return kEvaluation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace octo::cli

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octo {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inverse of zero, or a rational with zero denominator.
class ZeroDivision : public Error {
 public:
  using Error::Error;
};

class InvalidTolerance : public Error {
 public:
  using Error::Error;
};

/// Coefficient list of the wrong length, malformed word, and similar.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Tree leaf count disagrees with the number of factors.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::string name)
      : Error("unbound variable '" + name + "'"), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ReservedIdentifier : public Error {
 public:
  explicit ReservedIdentifier(const std::string& name)
      : Error("'" + name + "' is a reserved unit name and cannot be bound") {}
};

/// Parse failure carrying the byte offset into the source and the set of
/// tokens that would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& detail = {})
      : Error(format(offset, expected, detail)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t offset, const std::vector<std::string>& expected,
                            const std::string& detail) {
    std::string msg = "syntax error at offset " + std::to_string(offset);
    if (!detail.empty()) msg += ": " + detail;
    if (!expected.empty()) {
      msg += "; expected one of {";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += ", ";
        msg += expected[i];
      }
      msg += "}";
    }
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace octo

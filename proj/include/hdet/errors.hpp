#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hdet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (pole, log of a
/// nonpositive number, invalid Jacobi exponents, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameters are integrable but outside the range where an asymptotic
/// formula is claimed to hold.
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// The working precision was exhausted: a pivot or norm that must be
/// positive came out nonpositive. `index` is the failing step.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, std::size_t index)
      : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// An iterative procedure (root polishing, resolution search) did not converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Syntax or name error in a perturbation expression. `offset` is the byte
/// offset into the source; `expected` lists acceptable tokens.
class ParseError : public Error {
 public:
  enum class Kind { syntax, unknown_identifier, arity };

  ParseError(Kind kind, std::size_t offset, std::string detail, std::string expected = {})
      : Error(format(kind, offset, detail, expected)),
        kind_(kind),
        offset_(offset),
        expected_(std::move(expected)) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  static std::string format(Kind kind, std::size_t offset, const std::string& detail,
                            const std::string& expected) {
    static const char* names[] = {"syntax error", "unknown identifier", "arity mismatch"};
    std::string msg = std::string(names[static_cast<int>(kind)]) + " at offset " +
                      std::to_string(offset) + ": " + detail;
    if (!expected.empty()) msg += " (expected " + expected + ")";
    return msg;
  }

  Kind kind_;
  std::size_t offset_;
  std::string expected_;
};

/// A perturbation failed validation: nonpositive value or evaluation error at
/// the witness point.
class PositivityError : public Error {
 public:
  PositivityError(const std::string& what, std::string witness)
      : Error(what + " at x = " + witness), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace hdet

#ifndef KOSZUL_ERROR_HPP
#define KOSZUL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace koszul {

/// Operands live in polynomial rings with different variable counts.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The mathematical hypotheses an operation relies on are not satisfied
/// by the input (e.g. a digit bound or an ideal-shape requirement).
class InapplicableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive search was refused because it exceeds the configured caps.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A machine check on a constructed object failed. Always a bug or a
/// genuine counterexample, never a user error.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace koszul

#endif

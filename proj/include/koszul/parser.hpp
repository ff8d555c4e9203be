#ifndef KOSZUL_PARSER_HPP
#define KOSZUL_PARSER_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "koszul/ideal.hpp"

namespace koszul {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
};

/// Parse tree of the ideal grammar
///   n=<int>; expr
///   expr  := group | expr "*" expr | expr "^" int | expr "[" int "]"
///          | "pborel(" monomial ";" int ")"
///   group := "(" monomial ("," monomial)* ")"
/// Postfix ^ and [q] bind tighter than *.
struct IdealNode {
  enum class Kind { Group, Product, Power, Frobenius, PBorel };
  Kind kind = Kind::Group;
  SourceSpan span;
  std::vector<Monomial> monomials;  // Group generators, or the PBorel generator
  std::uint64_t value = 0;          // exponent, Frobenius q, or prime
  std::vector<std::unique_ptr<IdealNode>> children;
};

class IdealExpression {
 public:
  IdealExpression(std::size_t num_vars, std::unique_ptr<IdealNode> root)
      : n_(num_vars), root_(std::move(root)) {}

  std::size_t num_vars() const noexcept { return n_; }
  const IdealNode& root() const noexcept { return *root_; }

  MonomialIdeal evaluate() const;
  /// Canonical text of the expression, e.g. "n=4; (x1, x2)*(x1, x2, x3, x4)[2]".
  std::string render() const;

 private:
  std::size_t n_;
  std::unique_ptr<IdealNode> root_;
};

/// Throws ParseError with the offending line and column.
IdealExpression parse_ideal(std::string_view text);

/// A product of variable powers like "x1^2*x3", or "1", in num_vars variables.
Monomial parse_monomial(std::string_view text, std::size_t num_vars);

/// Exponent vector "1,0,2" as a monomial.
Monomial parse_exponents(std::string_view text, std::size_t num_vars);

/// "n=3; (x1^2, x2)" for a nonzero ideal.
std::string render_ideal(const MonomialIdeal& I);

}  // namespace koszul

#endif

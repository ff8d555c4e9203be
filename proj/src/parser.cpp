#include "koszul/parser.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "koszul/error.hpp"
#include "koszul/pborel.hpp"

namespace koszul {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t num_vars) : text_(text), n_(num_vars) {}

  std::size_t parse_header() {
    skip_space();
    expect('n');
    skip_space();
    expect('=');
    skip_space();
    const auto pos = here();
    const auto n = number();
    if (n == 0 || n > 64) throw ParseError("variable count must lie in 1..64", pos.line, pos.column);
    skip_space();
    expect(';');
    n_ = n;
    return n;
  }

  std::unique_ptr<IdealNode> parse_expr() {
    auto left = parse_postfix();
    skip_space();
    while (peek() == '*') {
      const auto start = left->span;
      advance();
      auto right = parse_postfix();
      auto node = std::make_unique<IdealNode>();
      node->kind = IdealNode::Kind::Product;
      node->span = start;
      node->children.push_back(std::move(left));
      node->children.push_back(std::move(right));
      left = std::move(node);
      skip_space();
    }
    return left;
  }

  Monomial parse_monomial_text() {
    skip_space();
    Monomial u(n_);
    if (peek() == '1') {
      advance();
      return u;
    }
    while (true) {
      skip_space();
      const auto pos = here();
      expect('x');
      const auto var = number();
      if (var == 0 || var > n_) {
        throw ParseError("variable x" + std::to_string(var) + " outside x1..x" + std::to_string(n_),
                         pos.line, pos.column);
      }
      std::uint64_t e = 1;
      skip_space();
      if (peek() == '^') {
        advance();
        e = exponent();
      }
      const auto total = static_cast<std::uint64_t>(u.nu(var)) + e;
      if (total > std::numeric_limits<Exponent>::max()) {
        throw ParseError("exponent too large", pos.line, pos.column);
      }
      u.set_exponent(var, static_cast<Exponent>(total));
      skip_space();
      if (peek() != '*' || !next_is_variable()) break;
      advance();
    }
    return u;
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) {
      const auto p = here();
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", p.line, p.column);
    }
  }

  std::size_t num_vars() const { return n_; }

 private:
  std::unique_ptr<IdealNode> parse_postfix() {
    auto node = parse_primary();
    while (true) {
      skip_space();
      if (peek() == '^') {
        advance();
        auto parent = std::make_unique<IdealNode>();
        parent->kind = IdealNode::Kind::Power;
        parent->span = node->span;
        parent->value = exponent();
        parent->children.push_back(std::move(node));
        node = std::move(parent);
      } else if (peek() == '[') {
        advance();
        skip_space();
        auto parent = std::make_unique<IdealNode>();
        parent->kind = IdealNode::Kind::Frobenius;
        parent->span = node->span;
        const auto pos = here();
        parent->value = exponent();
        if (parent->value == 0) throw ParseError("Frobenius exponent must be positive", pos.line, pos.column);
        skip_space();
        expect(']');
        parent->children.push_back(std::move(node));
        node = std::move(parent);
      } else {
        return node;
      }
    }
  }

  std::unique_ptr<IdealNode> parse_primary() {
    skip_space();
    auto node = std::make_unique<IdealNode>();
    node->span = here();
    if (text_.substr(pos_, 7) == "pborel(") {
      pos_ += 7;
      node->kind = IdealNode::Kind::PBorel;
      node->monomials.push_back(parse_monomial_text());
      skip_space();
      expect(';');
      skip_space();
      const auto pos = here();
      node->value = number();
      if (!is_prime(node->value)) throw ParseError("pborel needs a prime", pos.line, pos.column);
      skip_space();
      expect(')');
      return node;
    }
    node->kind = IdealNode::Kind::Group;
    expect('(');
    node->monomials.push_back(parse_monomial_text());
    skip_space();
    while (peek() == ',') {
      advance();
      node->monomials.push_back(parse_monomial_text());
      skip_space();
    }
    expect(')');
    return node;
  }

  bool next_is_variable() const {
    std::size_t k = pos_ + 1;
    while (k < text_.size() && std::isspace(static_cast<unsigned char>(text_[k]))) ++k;
    return k < text_.size() && text_[k] == 'x';
  }

  std::uint64_t exponent() {
    skip_space();
    const auto p = here();
    if (peek() == '-') throw ParseError("negative exponent", p.line, p.column);
    const auto e = number();
    if (e > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", p.line, p.column);
    return e;
  }

  std::uint64_t number() {
    const auto p = here();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a number", p.line, p.column);
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto d = static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        throw ParseError("number too large", p.line, p.column);
      }
      v = v * 10 + d;
      advance();
    }
    return v;
  }

  void expect(char c) {
    if (peek() != c) {
      const auto p = here();
      const std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
      throw ParseError(std::string("expected '") + c + "', found " + found, p.line, p.column);
    }
    advance();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  SourceSpan here() const { return {line_, col_, 1}; }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

MonomialIdeal evaluate_node(const IdealNode& node, std::size_t n) {
  switch (node.kind) {
    case IdealNode::Kind::Group: return MonomialIdeal(n, node.monomials);
    case IdealNode::Kind::Product:
      return product(evaluate_node(*node.children[0], n), evaluate_node(*node.children[1], n));
    case IdealNode::Kind::Power: return power(evaluate_node(*node.children[0], n), node.value);
    case IdealNode::Kind::Frobenius:
      return frobenius_power(evaluate_node(*node.children[0], n), static_cast<Exponent>(node.value));
    case IdealNode::Kind::PBorel: return principal_p_borel(node.monomials[0], node.value).expand();
  }
  throw std::logic_error("unknown node kind");
}

void render_node(const IdealNode& node, std::ostream& os) {
  switch (node.kind) {
    case IdealNode::Kind::Group:
      os << '(';
      for (std::size_t k = 0; k < node.monomials.size(); ++k) {
        if (k) os << ", ";
        os << node.monomials[k].to_string();
      }
      os << ')';
      return;
    case IdealNode::Kind::Product:
      render_node(*node.children[0], os);
      os << '*';
      render_node(*node.children[1], os);
      return;
    case IdealNode::Kind::Power:
      render_node(*node.children[0], os);
      os << '^' << node.value;
      return;
    case IdealNode::Kind::Frobenius:
      render_node(*node.children[0], os);
      os << '[' << node.value << ']';
      return;
    case IdealNode::Kind::PBorel:
      os << "pborel(" << node.monomials[0].to_string() << "; " << node.value << ')';
      return;
  }
}

}  // namespace

MonomialIdeal IdealExpression::evaluate() const { return evaluate_node(*root_, n_); }

std::string IdealExpression::render() const {
  std::ostringstream os;
  os << "n=" << n_ << "; ";
  render_node(*root_, os);
  return os.str();
}

IdealExpression parse_ideal(std::string_view text) {
  Parser p(text, 0);
  const auto n = p.parse_header();
  auto root = p.parse_expr();
  p.finish();
  return IdealExpression(n, std::move(root));
}

Monomial parse_monomial(std::string_view text, std::size_t num_vars) {
  Parser p(text, num_vars);
  auto u = p.parse_monomial_text();
  p.finish();
  return u;
}

Monomial parse_exponents(std::string_view text, std::size_t num_vars) {
  std::vector<Exponent> e;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const auto piece = text.substr(start, end - start);
    std::uint64_t v = 0;
    if (piece.empty()) throw ParseError("empty exponent", 1, start + 1);
    for (std::size_t k = 0; k < piece.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(piece[k]))) {
        throw ParseError("expected a non-negative integer", 1, start + k + 1);
      }
      v = v * 10 + static_cast<std::uint64_t>(piece[k] - '0');
      if (v > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", 1, start + 1);
    }
    e.push_back(static_cast<Exponent>(v));
    start = end + 1;
  }
  if (e.size() != num_vars) {
    throw DimensionMismatch("expected " + std::to_string(num_vars) + " exponents, got " +
                            std::to_string(e.size()));
  }
  return Monomial(std::move(e));
}

std::string render_ideal(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("the zero ideal has no rendering in the grammar");
  return "n=" + std::to_string(I.num_vars()) + "; " + I.to_string();
}

}  // namespace koszul

#include "msd/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace msd {

struct Expression::Node {
  enum class Kind { constant, variable, negate, add, sub, mul, div, pow };
  Kind kind = Kind::constant;
  double value = 0.0;
  int index = 0;  // 0-based variable index
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr binary(Node::Kind kind, NodePtr lhs, NodePtr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) {
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    return root;
  }

  int max_variable() const { return max_variable_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ExpressionError(msg, static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = binary(Node::Kind::add, lhs, term());
      } else if (accept('-')) {
        lhs = binary(Node::Kind::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = binary(Node::Kind::mul, lhs, unary());
      } else if (accept('/')) {
        lhs = binary(Node::Kind::div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::negate;
      node->lhs = unary();
      return node;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (accept('^')) {
      return binary(Node::Kind::pow, base, unary());
    }
    return base;
  }

  NodePtr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      const std::size_t start = ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected variable index after 'x'");
      const int index = std::atoi(text_.substr(start, pos_ - start).c_str());
      if (index < 1) {
        pos_ = start;
        fail("variable indices start at x1");
      }
      max_variable_ = std::max(max_variable_, index);
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::variable;
      node->index = index - 1;
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text_.c_str() + pos_;
      char* end = nullptr;
      const double value = std::strtod(begin, &end);
      if (end == begin) fail("malformed number");
      pos_ += static_cast<std::size_t>(end - begin);
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::constant;
      node->value = value;
      return node;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int max_variable_ = 0;
};

double eval(const Node& node, const Vector& x) {
  switch (node.kind) {
    case Node::Kind::constant: return node.value;
    case Node::Kind::variable: return x[node.index];
    case Node::Kind::negate: return -eval(*node.lhs, x);
    case Node::Kind::add: return eval(*node.lhs, x) + eval(*node.rhs, x);
    case Node::Kind::sub: return eval(*node.lhs, x) - eval(*node.rhs, x);
    case Node::Kind::mul: return eval(*node.lhs, x) * eval(*node.rhs, x);
    case Node::Kind::div: return eval(*node.lhs, x) / eval(*node.rhs, x);
    case Node::Kind::pow: return std::pow(eval(*node.lhs, x), eval(*node.rhs, x));
  }
  return 0.0;
}

}  // namespace

Expression Expression::parse(const std::string& text) {
  Parser parser(text);
  NodePtr root = parser.parse();
  return Expression(std::move(root), parser.max_variable(), text);
}

double Expression::evaluate(const Vector& x) const {
  if (x.size() < max_variable_) {
    throw DimensionError("expression references x" + std::to_string(max_variable_) +
                         " but the point has length " + std::to_string(x.size()));
  }
  return eval(*root_, x);
}

}  // namespace msd

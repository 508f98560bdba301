#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "msd/types.hpp"

namespace msd {

/// Thrown by Expression::parse. `column` is 1-based.
class ExpressionError : public std::runtime_error {
 public:
  ExpressionError(const std::string& what, int column)
      : std::runtime_error(what), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

/// Arithmetic over variables x1..xn:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' unary)?        right associative, binds tighter than unary minus
///   atom   := number | 'x' index | '(' expr ')'
///
/// Immutable once parsed; evaluation is reentrant.
class Expression {
 public:
  static Expression parse(const std::string& text);

  double evaluate(const Vector& x) const;

  /// Largest variable index referenced (0 for a constant expression).
  int max_variable() const { return max_variable_; }

  const std::string& text() const { return text_; }

  struct Node;

 private:
  Expression(std::shared_ptr<const Node> root, int max_variable, std::string text)
      : root_(std::move(root)), max_variable_(max_variable), text_(std::move(text)) {}

  std::shared_ptr<const Node> root_;
  int max_variable_ = 0;
  std::string text_;
};

}  // namespace msd

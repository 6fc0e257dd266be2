/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "quantity.hpp"

namespace infobound {

// Textual quantity expressions, the input language of the CLI and of
// scenario files:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' int)?
//   atom   := '-' atom | number | number? symbol | '(' expr ')'
//
// A symbol is a unit (with optional SI prefix, longest match) or one of the
// named constants c, hbar, G, kB. A number directly followed by one symbol,
// as in "10 fs", multiplies the two. '^' takes integer literals only and
// binds tighter than '*' and '/', which bind tighter than '+' and '-'; all
// binary operators associate left.

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the last byte
};

struct ExprNode {
  enum class Kind { number, symbol, negate, binary, power };
  enum class Op { add, sub, mul, div };

  Kind kind;
  SourceSpan span;
  double number = 0.0;         // Kind::number
  std::string symbol;          // Kind::symbol
  Quantity symbol_value;       // Kind::symbol, resolved at parse time
  Op op = Op::add;             // Kind::binary
  int exponent = 0;            // Kind::power
  std::unique_ptr<ExprNode> lhs, rhs;  // rhs only for Kind::binary
};

/// A parsed quantity expression: the syntax tree plus the source text the
/// node spans refer to.
class ParsedExpression {
public:
  ParsedExpression(std::string source, std::unique_ptr<ExprNode> root)
      : source_(std::move(source)), root_(std::move(root)) {}

  const std::string& source() const { return source_; }
  const ExprNode& root() const { return *root_; }

  /// Fully parenthesized dump, e.g. "((1 * GW) * (10 * fs))".
  std::string structure() const;

private:
  std::string source_;
  std::unique_ptr<ExprNode> root_;
};

/// Parses `text`. Lexical and syntax errors throw Error(errc::parse) whose
/// offset() lies within [0, text.size()].
ParsedExpression parse(std::string_view text);

/// Evaluates a parsed expression. Dimension and domain errors are rethrown
/// with the offending subexpression's source span and snippet attached.
Quantity eval(const ParsedExpression& expr);

/// parse + eval in one step.
Quantity eval_expression(std::string_view text);

/// Canonical re-parseable form: magnitude followed by explicit '*' factors
/// over base units, e.g. "2.5 * kg * m^2 * s^-2". eval(parse(render(q)))
/// reproduces q.
std::string render(const Quantity& q, int significant_digits = 17);

/// Value of `q` expressed in the unit named by `unit_expression`
/// (e.g. "uJ", "J / K"), which must have the same dimension.
double value_in(const Quantity& q, std::string_view unit_expression);

}  // namespace infobound

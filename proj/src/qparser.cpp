/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "qparser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

#include "constants.hpp"

namespace infobound {

namespace {

struct Token {
  enum class Kind {
    number,
    ident,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    end
  };
  Kind kind;
  std::size_t begin = 0;
  std::size_t end = 0;
  double value = 0.0;      // number
  std::string_view text;   // ident / number
};

bool ident_byte(unsigned char c) {
  // letters plus the UTF-8 micro sign bytes (C2 B5)
  return std::isalpha(c) || c == 0xC2 || c == 0xB5;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = text[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c) || (c == '.' && i + 1 < text.size() &&
                            std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      double value = 0.0;
      const char* first = text.data() + i;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec == std::errc::result_out_of_range) {
        throw Error(errc::parse,
                    "number out of range at offset " + std::to_string(i), i,
                    static_cast<std::size_t>(ptr - text.data()));
      }
      if (ec != std::errc()) {
        throw Error(errc::parse,
                    "malformed number at offset " + std::to_string(i), i,
                    i + 1);
      }
      std::size_t len = static_cast<std::size_t>(ptr - first);
      out.push_back({Token::Kind::number, i, i + len, value,
                     text.substr(i, len)});
      i += len;
      continue;
    }
    if (ident_byte(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_byte(static_cast<unsigned char>(text[j])))
        ++j;
      out.push_back({Token::Kind::ident, i, j, 0.0, text.substr(i, j - i)});
      i = j;
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Kind::plus; break;
      case '-': kind = Token::Kind::minus; break;
      case '*': kind = Token::Kind::star; break;
      case '/': kind = Token::Kind::slash; break;
      case '^': kind = Token::Kind::caret; break;
      case '(': kind = Token::Kind::lparen; break;
      case ')': kind = Token::Kind::rparen; break;
      default:
        throw Error(errc::parse,
                    "unexpected character '" + std::string(1, text[i]) +
                        "' at offset " + std::to_string(i),
                    i, i + 1);
    }
    out.push_back({kind, i, i + 1, 0.0, text.substr(i, 1)});
    ++i;
  }
  out.push_back({Token::Kind::end, text.size(), text.size(), 0.0, {}});
  return out;
}

using NodePtr = std::unique_ptr<ExprNode>;

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text), tokens_(lex(text)) {}

  NodePtr run() {
    NodePtr e = parse_expr();
    if (peek().kind != Token::Kind::end)
      throw Error(errc::parse,
                  "unexpected token '" + std::string(peek().text) +
                      "' at offset " + std::to_string(peek().begin),
                  peek().begin, peek().end);
    return e;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    std::string shown =
        t.kind == Token::Kind::end ? "end of input" : "'" + std::string(t.text) + "'";
    throw Error(errc::parse,
                what + " but found " + shown + " at offset " +
                    std::to_string(t.begin),
                t.begin, t.end == t.begin ? t.begin + 1 : t.end);
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    while (peek().kind == Token::Kind::plus ||
           peek().kind == Token::Kind::minus) {
      ExprNode::Op op = advance().kind == Token::Kind::plus
                            ? ExprNode::Op::add
                            : ExprNode::Op::sub;
      NodePtr rhs = parse_term();
      lhs = make_binary(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    while (peek().kind == Token::Kind::star ||
           peek().kind == Token::Kind::slash) {
      ExprNode::Op op = advance().kind == Token::Kind::star
                            ? ExprNode::Op::mul
                            : ExprNode::Op::div;
      NodePtr rhs = parse_factor();
      lhs = make_binary(op, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  NodePtr parse_factor() {
    NodePtr base = parse_atom();
    if (peek().kind != Token::Kind::caret) return base;
    advance();  // '^'
    bool negative = false;
    if (peek().kind == Token::Kind::minus) {
      negative = true;
      advance();
    }
    const Token& t = peek();
    if (t.kind != Token::Kind::number || !integer_literal(t.text))
      fail(t, "expected integer exponent");
    advance();
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::power;
    node->span = {base->span.begin, t.end};
    node->exponent = static_cast<int>(t.value) * (negative ? -1 : 1);
    node->lhs = std::move(base);
    return node;
  }

  NodePtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::minus: {
        advance();
        NodePtr inner = parse_atom();
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Kind::negate;
        node->span = {t.begin, inner->span.end};
        node->lhs = std::move(inner);
        return node;
      }
      case Token::Kind::number: {
        advance();
        NodePtr num = make_number(t);
        if (peek().kind == Token::Kind::ident) {
          // juxtaposition: "10 fs" multiplies the number by one symbol
          const Token& sym = advance();
          return make_binary(ExprNode::Op::mul, std::move(num),
                             make_symbol(sym));
        }
        return num;
      }
      case Token::Kind::ident:
        advance();
        return make_symbol(t);
      case Token::Kind::lparen: {
        advance();
        NodePtr inner = parse_expr();
        const Token& close = peek();
        if (close.kind != Token::Kind::rparen) fail(close, "expected ')'");
        advance();
        inner->span = {t.begin, close.end};
        return inner;
      }
      default:
        fail(t, "expected a value");
    }
  }

  static bool integer_literal(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return text.size() <= 3;  // |k| <= 512 is enforced later; reject huge
  }

  static NodePtr make_number(const Token& t) {
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::number;
    node->span = {t.begin, t.end};
    node->number = t.value;
    return node;
  }

  NodePtr make_symbol(const Token& t) const {
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::symbol;
    node->span = {t.begin, t.end};
    node->symbol = std::string(t.text);
    const PhysicalConstants& k = constants();
    if (t.text == "c") {
      node->symbol_value = k.c;
    } else if (t.text == "hbar") {
      node->symbol_value = k.hbar;
    } else if (t.text == "G") {
      node->symbol_value = k.G;
    } else if (t.text == "kB") {
      node->symbol_value = k.k_B;
    } else if (auto unit = UnitTable::standard().resolve(t.text)) {
      node->symbol_value = *unit;
    } else {
      throw Error(errc::parse,
                  "unknown symbol '" + std::string(t.text) + "' at offset " +
                      std::to_string(t.begin),
                  t.begin, t.end);
    }
    return node;
  }

  static NodePtr make_binary(ExprNode::Op op, NodePtr lhs, NodePtr rhs) {
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::binary;
    node->span = {lhs->span.begin, rhs->span.end};
    node->op = op;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void dump_node(const ExprNode& n, std::string& out) {
  switch (n.kind) {
    case ExprNode::Kind::number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%g", n.number);
      out += buf;
      return;
    }
    case ExprNode::Kind::symbol:
      out += n.symbol;
      return;
    case ExprNode::Kind::negate:
      out += "(-";
      dump_node(*n.lhs, out);
      out += ')';
      return;
    case ExprNode::Kind::power:
      out += '(';
      dump_node(*n.lhs, out);
      out += " ^ ";
      out += std::to_string(n.exponent);
      out += ')';
      return;
    case ExprNode::Kind::binary: {
      static constexpr const char* kOp[] = {" + ", " - ", " * ", " / "};
      out += '(';
      dump_node(*n.lhs, out);
      out += kOp[static_cast<int>(n.op)];
      dump_node(*n.rhs, out);
      out += ')';
      return;
    }
  }
}

Quantity eval_node(const ExprNode& n, const std::string& source) {
  try {
    switch (n.kind) {
      case ExprNode::Kind::number:
        return Quantity(n.number, dim::dimensionless);
      case ExprNode::Kind::symbol:
        return n.symbol_value;
      case ExprNode::Kind::negate:
        return -eval_node(*n.lhs, source);
      case ExprNode::Kind::power:
        return pow_int(eval_node(*n.lhs, source), n.exponent);
      case ExprNode::Kind::binary: {
        Quantity a = eval_node(*n.lhs, source);
        Quantity b = eval_node(*n.rhs, source);
        switch (n.op) {
          case ExprNode::Op::add: return a + b;
          case ExprNode::Op::sub: return a - b;
          case ExprNode::Op::mul: return a * b;
          case ExprNode::Op::div: return a / b;
        }
        throw Error(errc::internal, "unreachable operator");
      }
    }
    throw Error(errc::internal, "unreachable node kind");
  } catch (const Error& e) {
    if (e.has_location()) throw;
    std::string snippet =
        source.substr(n.span.begin, n.span.end - n.span.begin);
    throw Error(e.code(),
                std::string(e.what()) + " in '" + snippet + "' at offset " +
                    std::to_string(n.span.begin),
                n.span.begin, n.span.end);
  }
}

}  // namespace

std::string ParsedExpression::structure() const {
  std::string out;
  dump_node(*root_, out);
  return out;
}

ParsedExpression parse(std::string_view text) {
  Parser p(text);
  return ParsedExpression(std::string(text), p.run());
}

Quantity eval(const ParsedExpression& expr) {
  return eval_node(expr.root(), expr.source());
}

Quantity eval_expression(std::string_view text) { return eval(parse(text)); }

std::string render(const Quantity& q, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, q.magnitude());
  std::string out = buf;
  static constexpr const char* kBaseSymbol[4] = {"kg", "m", "s", "K"};
  const auto& exp = q.dimension().exponents();
  for (int i = 0; i < 4; ++i) {
    if (exp[i] == 0) continue;
    out += " * ";
    out += kBaseSymbol[i];
    if (exp[i] != 1) {
      out += '^';
      out += std::to_string(exp[i]);
    }
  }
  return out;
}

double value_in(const Quantity& q, std::string_view unit_expression) {
  Quantity unit = eval_expression(unit_expression);
  return ratio(q, unit);
}

}  // namespace infobound

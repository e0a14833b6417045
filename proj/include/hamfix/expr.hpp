#ifndef HAMFIX_EXPR_HPP
#define HAMFIX_EXPR_HPP

#include <cctype>
#include <functional>
#include <memory>
#include <string>

#include "hamfix/errors.hpp"
#include "hamfix/fixed_data.hpp"
#include "hamfix/localization.hpp"

namespace hamfix {

// Class-expression language for cmd_integrate:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' natural)?
//   atom   := integer | 'ut' | 't' | 'c' natural | '(' expr ')'
// 'ut' is u-tilde based at the minimal component, 'cK' the degree-2K
// equivariant Chern class built from the data. Whitespace insensitive.

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Number, UTilde, T, Chern, Add, Sub, Mul, Pow };
  Kind kind;
  Integer number = 0;  // Kind::Number
  int index = 0;       // Chern index or Pow exponent
  ExprPtr lhs, rhs;

  static ExprPtr make_leaf(Kind k) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    return n;
  }
  static ExprPtr make_number(Integer v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::Number;
    n->number = std::move(v);
    return n;
  }
  static ExprPtr make_chern(int k) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::Chern;
    n->index = k;
    return n;
  }
  static ExprPtr make_binary(Kind k, ExprPtr a, ExprPtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }
  static ExprPtr make_pow(ExprPtr base, int e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::Pow;
    n->lhs = std::move(base);
    n->index = e;
    return n;
  }
};

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind || a->number != b->number || a->index != b->index)
    return false;
  return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
}

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(const std::string& src) : src_(src) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size())
      throw ParseError("unexpected input after expression", pos_);
    return e;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int parse_natural(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw ParseError(std::string("expected ") + what, start);
    return std::stoi(src_.substr(start, pos_ - start));
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (true) {
      skip_ws();
      if (eat('+'))
        e = ExprNode::make_binary(ExprNode::Kind::Add, e, parse_term());
      else if (eat('-'))
        e = ExprNode::make_binary(ExprNode::Kind::Sub, e, parse_term());
      else
        return e;
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (eat('*'))
      e = ExprNode::make_binary(ExprNode::Kind::Mul, e, parse_factor());
    return e;
  }

  ExprPtr parse_factor() {
    ExprPtr a = parse_atom();
    if (eat('^')) return ExprNode::make_pow(a, parse_natural("exponent"));
    return a;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("expected atom", pos_);
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)))
      return ExprNode::make_number(Integer(parse_natural("integer")));
    if (c == 'u') {
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == 't') {
        pos_ += 2;
        return ExprNode::make_leaf(ExprNode::Kind::UTilde);
      }
      throw ParseError("expected 'ut'", pos_);
    }
    if (c == 't') {
      ++pos_;
      return ExprNode::make_leaf(ExprNode::Kind::T);
    }
    if (c == 'c') {
      ++pos_;
      return ExprNode::make_chern(parse_natural("Chern index"));
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }
};

}  // namespace detail

inline ExprPtr parse_class_expr(const std::string& src) {
  return detail::ExprParser(src).parse();
}

// Canonical form: minimal parentheses under the grammar's precedence;
// parse(print_expr(e)) reproduces e node-for-node.
inline std::string print_expr(const ExprPtr& e) {
  using Kind = ExprNode::Kind;
  auto wrap = [](const std::string& s, bool need) {
    return need ? "(" + s + ")" : s;
  };
  // levels: add/sub 1, mul 2, pow base 3 (atoms only)
  std::function<std::string(const ExprPtr&, int)> go =
      [&](const ExprPtr& n, int min_level) -> std::string {
    switch (n->kind) {
      case Kind::Number:
        return n->number.get_str();
      case Kind::UTilde:
        return "ut";
      case Kind::T:
        return "t";
      case Kind::Chern:
        return "c" + std::to_string(n->index);
      case Kind::Add:
        return wrap(go(n->lhs, 1) + " + " + go(n->rhs, 2), min_level > 1);
      case Kind::Sub:
        return wrap(go(n->lhs, 1) + " - " + go(n->rhs, 2), min_level > 1);
      case Kind::Mul:
        return wrap(go(n->lhs, 2) + " * " + go(n->rhs, 3), min_level > 2);
      case Kind::Pow:
        return wrap(go(n->lhs, 4) + "^" + std::to_string(n->index),
                    min_level > 3);
    }
    return "";
  };
  return go(e, 1);
}

inline EquivariantClass eval_expr(const ExprPtr& e,
                                  const FixedPointData& data) {
  using Kind = ExprNode::Kind;
  switch (e->kind) {
    case Kind::Number:
      return ec_constant(data, Rational(e->number));
    case Kind::UTilde:
      return u_tilde(data, 0);
    case Kind::T:
      return ec_t(data);
    case Kind::Chern:
      return equivariant_chern_part(data, e->index);
    case Kind::Add:
      return ec_add(eval_expr(e->lhs, data), eval_expr(e->rhs, data));
    case Kind::Sub:
      return ec_sub(eval_expr(e->lhs, data), eval_expr(e->rhs, data));
    case Kind::Mul:
      return ec_mul(eval_expr(e->lhs, data), eval_expr(e->rhs, data), data);
    case Kind::Pow:
      return ec_pow(eval_expr(e->lhs, data),
                    static_cast<unsigned>(e->index), data);
  }
  throw Error("eval_expr: unreachable");
}

}  // namespace hamfix

#endif

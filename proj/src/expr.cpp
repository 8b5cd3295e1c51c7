#include "eulerg/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <vector>

namespace eulerg {
namespace {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Exp, Sin, Cos, Ln };

struct Node {
  Op op = Op::Const;
  Cplx value{};
  NodePtr lhs, rhs;
};

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

Cplx int_power(Cplx base, long k) {
  if (k < 0) return 1.0 / int_power(base, -k);
  Cplx r = 1.0;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Cplx eval(const Node& n, Cplx z) {
  switch (n.op) {
    case Op::Const: return n.value;
    case Op::Var: return z;
    case Op::Add: return eval(*n.lhs, z) + eval(*n.rhs, z);
    case Op::Sub: return eval(*n.lhs, z) - eval(*n.rhs, z);
    case Op::Mul: return eval(*n.lhs, z) * eval(*n.rhs, z);
    case Op::Div: return eval(*n.lhs, z) / eval(*n.rhs, z);
    case Op::Pow: {
      const Cplx base = eval(*n.lhs, z);
      // Constant integer exponents use exact repeated multiplication so that
      // z^3 stays real on the negative axis.
      if (n.rhs->op == Op::Const && n.rhs->value.imag() == 0.0 &&
          std::abs(n.rhs->value.real()) <= 64.0 && std::trunc(n.rhs->value.real()) == n.rhs->value.real())
        return int_power(base, static_cast<long>(n.rhs->value.real()));
      return std::pow(base, eval(*n.rhs, z));
    }
    case Op::Neg: return -eval(*n.lhs, z);
    case Op::Exp: return std::exp(eval(*n.lhs, z));
    case Op::Sin: return std::sin(eval(*n.lhs, z));
    case Op::Cos: return std::cos(eval(*n.lhs, z));
    case Op::Ln: return std::log(eval(*n.lhs, z));
  }
  return {};
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at column " + std::to_string(pos_ + 1) + " of \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expression() {
    NodePtr n = term();
    for (;;) {
      if (accept('+'))
        n = make(Op::Add, n, term());
      else if (accept('-'))
        n = make(Op::Sub, n, term());
      else
        return n;
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    for (;;) {
      if (accept('*'))
        n = make(Op::Mul, n, unary());
      else if (accept('/'))
        n = make(Op::Div, n, unary());
      else
        return n;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Op::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (accept('(')) {
      NodePtr n = expression();
      if (!accept(')')) fail("expected ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "z") return make(Op::Var);
      Op op;
      if (name == "exp")
        op = Op::Exp;
      else if (name == "sin")
        op = Op::Sin;
      else if (name == "cos")
        op = Op::Cos;
      else if (name == "ln")
        op = Op::Ln;
      else {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      if (!accept('(')) fail("expected '(' after " + name);
      NodePtr arg = expression();
      if (!accept(')')) fail("expected ')'");
      return make(op, arg);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
      if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
        pos_ = p;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (res.ec != std::errc{} || res.ptr != s_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    auto n = std::make_shared<Node>();
    n->value = v;
    return n;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

RhsFunction parse_expression(const std::string& text) {
  NodePtr root = Parser(text).parse();
  return [root](Cplx z) { return eval(*root, z); };
}

}  // namespace eulerg

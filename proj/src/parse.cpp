#include "kleindr/parse.hpp"

#include <cctype>
#include <memory>

namespace kleindr {

namespace {

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

// Small expression tree; built once per parse, evaluated immediately.
struct ExprNode {
  enum class Kind { number, var_x, gen_g, add, mul, div, pow } kind;
  std::uint64_t number = 0; // Kind::number
  long exponent = 0;        // Kind::pow
  ExprPtr lhs, rhs;

  explicit ExprNode(Kind k) : kind(k) {}
};

[[noreturn]] void syntax_error(size_t pos, const std::string& what) {
  fail(errc::syntax_error, "syntax error at position " + std::to_string(pos) + ": " + what);
}

class Parser {
public:
  Parser(const std::string& text, bool allow_x) : s_(text), allow_x_(allow_x) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) syntax_error(pos_, "trailing input");
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      // minus is plus in characteristic 2
      if (eat('+') || eat('-')) {
        ExprPtr r = term();
        ExprPtr n = std::make_unique<ExprNode>(ExprNode::Kind::add);
        n->lhs = std::move(e);
        n->rhs = std::move(r);
        e = std::move(n);
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    for (;;) {
      ExprNode::Kind kind;
      if (eat('*'))
        kind = ExprNode::Kind::mul;
      else if (eat('/'))
        kind = ExprNode::Kind::div;
      else
        return e;
      ExprPtr r = unary();
      ExprPtr n = std::make_unique<ExprNode>(kind);
      n->lhs = std::move(e);
      n->rhs = std::move(r);
      e = std::move(n);
    }
  }

  ExprPtr unary() {
    if (eat('-')) return unary();
    return factor();
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (eat('^')) {
      long e = exponent();
      ExprPtr n = std::make_unique<ExprNode>(ExprNode::Kind::pow);
      n->exponent = e;
      n->lhs = std::move(base);
      return n;
    }
    return base;
  }

  long exponent() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    size_t start = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      syntax_error(pos_, "expected an integer exponent");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) syntax_error(start, "exponent too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= s_.size()) syntax_error(pos_, "unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!eat(')')) syntax_error(pos_, "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_] - '0');
        if (v > (std::uint64_t(1) << 62)) syntax_error(pos_, "integer literal too large");
        ++pos_;
      }
      ExprPtr n = std::make_unique<ExprNode>(ExprNode::Kind::number);
      n->number = v;
      return n;
    }
    if (c == 'x') {
      if (!allow_x_) syntax_error(pos_, "the variable x is not allowed here");
      ++pos_;
      return std::make_unique<ExprNode>(ExprNode::Kind::var_x);
    }
    if (c == 'g') {
      ++pos_;
      return std::make_unique<ExprNode>(ExprNode::Kind::gen_g);
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      fail(errc::unknown_symbol, std::string("unknown symbol '") + c + "' at position " +
                                     std::to_string(pos_));
    syntax_error(pos_, std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
  bool allow_x_;
};

RatFun power_of(RatFun base, long e) {
  RatFun r(Poly::constant(base.ctx(), 1));
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

RatFun eval(const ExprNode& n, const FieldCtxPtr& ctx) {
  switch (n.kind) {
    case ExprNode::Kind::number:
      return RatFun(Poly::constant(ctx, n.number & 1)); // reduce mod 2
    case ExprNode::Kind::var_x:
      return RatFun(Poly::x(ctx));
    case ExprNode::Kind::gen_g:
      if (ctx->k() < 2)
        fail(errc::unknown_symbol, "the generator g needs a field extension (k > 1)");
      return RatFun(Poly::constant(ctx, 2));
    case ExprNode::Kind::add:
      return eval(*n.lhs, ctx) + eval(*n.rhs, ctx);
    case ExprNode::Kind::mul:
      return eval(*n.lhs, ctx) * eval(*n.rhs, ctx);
    case ExprNode::Kind::div: {
      RatFun den = eval(*n.rhs, ctx);
      if (den.is_zero()) fail(errc::zero_denominator, "division by an expression equal to 0");
      return eval(*n.lhs, ctx) / den;
    }
    case ExprNode::Kind::pow: {
      RatFun base = eval(*n.lhs, ctx);
      long e = n.exponent;
      if (e < 0) {
        if (base.is_zero()) fail(errc::zero_denominator, "negative power of 0");
        return RatFun(Poly::constant(ctx, 1)) / power_of(base, -e);
      }
      return power_of(base, e);
    }
  }
  fail(errc::internal, "bad expression node");
}

} // namespace

RatFun parse_expr(const std::string& text, const FieldCtxPtr& ctx) {
  Parser p(text, /*allow_x=*/true);
  ExprPtr ast = p.parse();
  return eval(*ast, ctx);
}

FieldElem parse_field_elem(const std::string& text, const FieldCtxPtr& ctx) {
  Parser p(text, /*allow_x=*/false);
  ExprPtr ast = p.parse();
  RatFun v = eval(*ast, ctx);
  if (!v.is_constant()) fail(errc::syntax_error, "expected a field element, got a function");
  return v.num().coeff(0);
}

} // namespace kleindr

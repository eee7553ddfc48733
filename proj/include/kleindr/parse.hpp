#ifndef KLEINDR_PARSE_HPP
#define KLEINDR_PARSE_HPP

#include <string>

#include "kleindr/ratfun.hpp"

namespace kleindr {

// Rational-function expressions over GF(2^k).  Grammar: standard
// precedence pow > unary minus > mul/div > add/sub, `^` for integer
// powers, parentheses; `-` is identified with `+` (characteristic 2).
// Literals: nonnegative integers (reduced mod 2), the variable `x`, and
// the field generator `g` (only when k > 1).
RatFun parse_expr(const std::string& text, const FieldCtxPtr& ctx);

// field element in the generator (same grammar without x or division)
FieldElem parse_field_elem(const std::string& text, const FieldCtxPtr& ctx);

} // namespace kleindr

#endif

#ifndef KLEINDR_POLY_HPP
#define KLEINDR_POLY_HPP

#include <string>
#include <vector>

#include "kleindr/gf2k.hpp"

namespace kleindr {

// Univariate polynomial over one GF(2^k) context, lowest degree first,
// no trailing zero coefficients.  The zero polynomial has an empty
// coefficient vector and degree -1.
class Poly {
public:
  Poly() = default;
  explicit Poly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
  Poly(FieldCtxPtr ctx, std::vector<std::uint64_t> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly zero(const FieldCtxPtr& ctx) { return Poly(ctx); }
  static Poly constant(const FieldElem& a) { return Poly(a.ctx(), {a.bits()}); }
  static Poly constant(const FieldCtxPtr& ctx, std::uint64_t bits) { return Poly(ctx, {bits}); }
  static Poly monomial(const FieldCtxPtr& ctx, std::uint64_t coeff_bits, int degree);
  static Poly x(const FieldCtxPtr& ctx) { return monomial(ctx, 1, 1); }

  const FieldCtxPtr& ctx() const { return ctx_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  std::uint64_t coeff_bits(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  FieldElem coeff(int i) const { return FieldElem(ctx_, coeff_bits(i)); }
  FieldElem lc() const { return coeff(deg()); }

  void set_coeff(int i, std::uint64_t bits);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.ctx_->same(*b.ctx_) && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const FieldElem& s) const;
  Poly shifted_up(int n) const; // * x^n

  // quotient and remainder; divisor must be nonzero
  std::pair<Poly, Poly> divrem(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divrem(d).first; }
  Poly operator%(const Poly& d) const { return divrem(d).second; }

  Poly monic() const;
  Poly derivative() const;
  Poly pow(long n) const;
  FieldElem eval(const FieldElem& at) const;

  // compose x -> x + q
  Poly shift_point(const FieldElem& q) const;
  // coefficient reversal: x^n * p(1/x) for n = deg (zero stays zero)
  Poly reversed() const;
  // g with g^2 = *this; requires all odd-degree coefficients to vanish
  Poly coeff_sqrt() const;

  Poly embed_to(const FieldCtxPtr& big) const;

  std::string str(const std::string& var = "x") const;

  // deterministic total order (degree, then coefficients high to low)
  static bool lex_less(const Poly& a, const Poly& b);

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void require_same(const Poly& o) const {
    if (!ctx_->same(*o.ctx_)) fail(errc::field_mismatch, "polynomials over different fields");
  }

  FieldCtxPtr ctx_;
  std::vector<std::uint64_t> c_;
};

Poly gcd(const Poly& a, const Poly& b); // monic, gcd(0,0) = 0

} // namespace kleindr

#endif

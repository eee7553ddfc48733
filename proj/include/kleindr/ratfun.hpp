#ifndef KLEINDR_RATFUN_HPP
#define KLEINDR_RATFUN_HPP

#include <limits>

#include "kleindr/factor.hpp"
#include "kleindr/poly.hpp"

namespace kleindr {

// ord of the zero function; a sentinel, not an error (h_inf = h0 + h1
// can vanish and must be classified downstream, not crash here)
inline constexpr int ORD_INF = std::numeric_limits<int>::max() / 4;

// A place of the projective line: a finite point q or infinity.
struct PointDesc {
  bool at_inf = false;
  FieldElem q; // valid iff !at_inf

  static PointDesc infinity() { return PointDesc{true, FieldElem()}; }
  static PointDesc finite(const FieldElem& q) { return PointDesc{false, q}; }
  std::string str() const { return at_inf ? "inf" : q.str(); }
};

// Normalized rational function: den monic and nonzero, gcd(num, den) = 1,
// zero is 0/1.
class RatFun {
public:
  RatFun() = default;
  explicit RatFun(const Poly& num) : num_(num), den_(Poly::constant(num.ctx(), 1)) {}
  RatFun(Poly num, Poly den);

  static RatFun zero(const FieldCtxPtr& ctx) { return RatFun(Poly::zero(ctx)); }
  static RatFun constant(const FieldElem& a) { return RatFun(Poly::constant(a)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldCtxPtr& ctx() const { return num_.ctx(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_poly() const { return den_.is_constant(); }

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  int ord_at(const FieldElem& q) const;
  int ord_at_infinity() const;
  int ord_at(const PointDesc& p) const { return p.at_inf ? ord_at_infinity() : ord_at(p.q); }

  RatFun embed_to(const FieldCtxPtr& big) const;
  std::string str(const std::string& var = "x") const;

private:
  Poly num_, den_;
};

// Truncated Laurent expansion in the local parameter t (t = x - q at a
// finite point, t = 1/x at infinity): coefficients for exponents
// start .. prec-1; coeffs[0] != 0 unless the series is 0 to precision.
struct LaurentSeries {
  PointDesc at;
  int start = 0;
  int prec = 0;
  FieldCtxPtr ctx;
  std::vector<std::uint64_t> coeffs;

  std::uint64_t coeff_bits(int e) const {
    long i = static_cast<long>(e) - start;
    return (i >= 0 && i < static_cast<long>(coeffs.size())) ? coeffs[i] : 0;
  }
  FieldElem coeff(int e) const { return FieldElem(ctx, coeff_bits(e)); }
};

// pre: prec > ord of h at the point; h != 0
LaurentSeries laurent_at(const RatFun& h, const PointDesc& at, int prec);

// h = polypart + sum over roots q of sum_j coeffs[j-1]/(x-q)^j, exactly.
struct PrincipalPart {
  FieldElem q;
  std::vector<FieldElem> coeffs; // index j-1 holds the coefficient of (x-q)^-j
};
struct PartialFractions {
  Poly polypart;
  std::vector<PrincipalPart> parts;

  RatFun reassemble() const;
};

// split must cover den(h) completely (UnsplitDenominator otherwise);
// h and split.ext must share a field.
PartialFractions partial_fractions(const RatFun& h, const SplitData& split);

} // namespace kleindr

#endif

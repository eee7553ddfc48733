#include "kleindr/ratfun.hpp"

#include <sstream>

namespace kleindr {

RatFun::RatFun(Poly num, Poly den) {
  if (den.is_zero()) fail(errc::zero_denominator, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly::zero(num.ctx());
    den_ = Poly::constant(num.ctx(), 1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.deg() > 0) {
    num = num / g;
    den = den / g;
  }
  FieldElem s = den.lc().inv();
  num_ = num.scaled(s);
  den_ = den.scaled(s);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) fail(errc::zero_denominator, "division by the zero function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

namespace {

int root_multiplicity(const Poly& p, const FieldElem& q) {
  if (p.is_zero()) return ORD_INF;
  Poly lin(p.ctx(), {q.bits(), 1});
  int m = 0;
  Poly cur = p;
  for (;;) {
    auto [quo, rem] = cur.divrem(lin);
    if (!rem.is_zero()) return m;
    ++m;
    cur = quo;
  }
}

} // namespace

int RatFun::ord_at(const FieldElem& q) const {
  if (is_zero()) return ORD_INF;
  // num and den are coprime, so at most one of the two multiplicities is nonzero
  return root_multiplicity(num_, q) - root_multiplicity(den_, q);
}

int RatFun::ord_at_infinity() const {
  if (is_zero()) return ORD_INF;
  return den_.deg() - num_.deg();
}

RatFun RatFun::embed_to(const FieldCtxPtr& big) const {
  return RatFun(num_.embed_to(big), den_.embed_to(big));
}

std::string RatFun::str(const std::string& var) const {
  if (is_poly()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

namespace {

// first n coefficients of P/Q as power series; Q[0] != 0
std::vector<std::uint64_t> series_divide(const FieldCtxPtr& ctx, const std::vector<std::uint64_t>& P,
                                         const std::vector<std::uint64_t>& Q, long n) {
  std::vector<std::uint64_t> r(std::max<long>(n, 0), 0);
  std::uint64_t q0inv = ctx->inv(Q[0]);
  for (long i = 0; i < n; ++i) {
    std::uint64_t acc = i < static_cast<long>(P.size()) ? P[i] : 0;
    for (long j = 1; j <= i && j < static_cast<long>(Q.size()); ++j)
      acc ^= ctx->mul(Q[j], r[i - j]);
    r[i] = ctx->mul(acc, q0inv);
  }
  return r;
}

int trailing_zeros(const std::vector<std::uint64_t>& v) {
  int n = 0;
  while (n < static_cast<int>(v.size()) && v[n] == 0) ++n;
  return n;
}

std::vector<std::uint64_t> poly_coeffs(const Poly& p) {
  std::vector<std::uint64_t> out(p.deg() + 1, 0);
  for (int i = 0; i <= p.deg(); ++i) out[i] = p.coeff_bits(i);
  return out;
}

} // namespace

LaurentSeries laurent_at(const RatFun& h, const PointDesc& at, int prec) {
  if (h.is_zero()) {
    LaurentSeries s;
    s.at = at;
    s.start = prec;
    s.prec = prec;
    s.ctx = h.ctx();
    return s;
  }
  const FieldCtxPtr& ctx = h.ctx();
  std::vector<std::uint64_t> N, D;
  int shift = 0;
  if (at.at_inf) {
    N = poly_coeffs(h.num().reversed());
    D = poly_coeffs(h.den().reversed());
    shift = h.den().deg() - h.num().deg();
  } else {
    N = poly_coeffs(h.num().shift_point(at.q));
    D = poly_coeffs(h.den().shift_point(at.q));
  }
  int vn = trailing_zeros(N), vd = trailing_zeros(D);
  int start = shift + vn - vd;
  if (prec <= start) fail(errc::usage_error, "laurent_at precision does not exceed the order");
  std::vector<std::uint64_t> Ns(N.begin() + vn, N.end());
  std::vector<std::uint64_t> Ds(D.begin() + vd, D.end());
  LaurentSeries s;
  s.at = at;
  s.start = start;
  s.prec = prec;
  s.ctx = ctx;
  s.coeffs = series_divide(ctx, Ns, Ds, prec - start);
  return s;
}

RatFun PartialFractions::reassemble() const {
  RatFun acc(polypart);
  const FieldCtxPtr& ctx = polypart.ctx();
  for (const auto& part : parts) {
    Poly lin(ctx, {part.q.bits(), 1});
    Poly num = Poly::zero(ctx);
    // Horner over descending j: sum_j c_j (x-q)^(e-j)
    for (size_t j = 0; j < part.coeffs.size(); ++j)
      num = num * lin + Poly::constant(part.coeffs[j]);
    acc = acc + RatFun(num, lin.pow(static_cast<long>(part.coeffs.size())));
  }
  return acc;
}

PartialFractions partial_fractions(const RatFun& h, const SplitData& split) {
  const FieldCtxPtr& ctx = h.ctx();
  if (!ctx->same(*split.ext))
    fail(errc::field_mismatch, "splitting data over a different field than the function");
  PartialFractions out;
  out.polypart = h.num() / h.den();
  long covered = 0;
  for (const auto& [q, mult] : split.roots) {
    int e = -h.ord_at(q);
    if (e <= 0) continue;
    covered += e;
    LaurentSeries s = laurent_at(h, PointDesc::finite(q), 0);
    PrincipalPart part;
    part.q = q;
    part.coeffs.resize(e);
    for (int j = 1; j <= e; ++j) part.coeffs[j - 1] = s.coeff(-j);
    out.parts.push_back(std::move(part));
  }
  if (covered != h.den().deg())
    fail(errc::unsplit_denominator, "denominator does not split over the supplied field");
  check_internal(out.reassemble() == h, "partial fractions do not reassemble");
  return out;
}

} // namespace kleindr

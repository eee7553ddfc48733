#include "kleindr/asform.hpp"

#include <algorithm>

namespace kleindr {

namespace {

// One descending pass kills every even exponent >= 2: the term injected
// at exponent j lies below the killed exponent 2j and is visited later
// in the same pass.
void reduce_principal_part(PrincipalPart& part, const FieldCtxPtr& ctx, SubstRecord& rec) {
  Poly lin(ctx, {part.q.bits(), 1});
  int e = static_cast<int>(part.coeffs.size());
  for (int j = e; j >= 2; --j) {
    if (j % 2 != 0) continue;
    FieldElem c = part.coeffs[j - 1];
    if (c.is_zero()) continue;
    FieldElem r = c.sqrt();
    part.coeffs[j - 1] = fe_zero(ctx);
    part.coeffs[j / 2 - 1] = part.coeffs[j / 2 - 1] + r;
    rec.s = rec.s + RatFun(Poly::constant(r), lin.pow(j / 2)); // r/(x-q)^(j/2)
    rec.log.push_back({PointDesc::finite(part.q), j, r});
  }
  while (!part.coeffs.empty() && part.coeffs.back().is_zero()) part.coeffs.pop_back();
}

} // namespace

std::pair<Poly, Poly> odd_form_poly(const Poly& p) {
  const FieldCtxPtr& ctx = p.ctx();
  Poly red = p;
  Poly beta = Poly::zero(ctx);
  for (int d = red.deg(); d >= 2; --d) {
    if (d % 2 != 0) continue;
    std::uint64_t c = red.coeff_bits(d);
    if (c == 0) continue;
    std::uint64_t r = ctx->sqrt(c);
    red.set_coeff(d, 0);
    red.set_coeff(d / 2, red.coeff_bits(d / 2) ^ r);
    beta = beta + Poly::monomial(ctx, r, d / 2);
  }
  return {red, beta};
}

std::pair<RatFun, SubstRecord> canonical_odd_form(const RatFun& h, const SplitData& split) {
  const FieldCtxPtr& ctx = h.ctx();
  SubstRecord rec;
  rec.s = RatFun::zero(ctx);
  PartialFractions pf = partial_fractions(h, split);

  auto [poly_red, beta] = odd_form_poly(pf.polypart);
  if (!beta.is_zero()) {
    for (int d = 0; d <= beta.deg(); ++d)
      if (beta.coeff_bits(d) != 0)
        rec.log.push_back({PointDesc::infinity(), 2 * d, beta.coeff(d)});
    rec.s = rec.s + RatFun(beta);
  }
  pf.polypart = poly_red;
  for (auto& part : pf.parts) reduce_principal_part(part, ctx, rec);
  pf.parts.erase(std::remove_if(pf.parts.begin(), pf.parts.end(),
                                [](const PrincipalPart& p) { return p.coeffs.empty(); }),
                 pf.parts.end());

  RatFun h_red = pf.reassemble();
  check_internal(h + rec.s * rec.s + rec.s == h_red, "odd-form identity h + s^2 + s = h_red failed");
  return {h_red, rec};
}

StandardTriple global_standard_form(const RatFun& h0, const RatFun& h1, int cap) {
  if (!h0.ctx()->same(*h1.ctx())) fail(errc::field_mismatch, "h0 and h1 over different fields");
  StandardTriple out;
  Poly dens = h0.den() * h1.den();
  out.split = splitting_data(dens, cap);
  out.ctx = out.split.ext;
  out.extended = !out.ctx->same(*h0.ctx());
  RatFun a = out.extended ? h0.embed_to(out.ctx) : h0;
  RatFun b = out.extended ? h1.embed_to(out.ctx) : h1;
  auto [h0s, rec0] = canonical_odd_form(a, out.split);
  auto [h1s, rec1] = canonical_odd_form(b, out.split);
  out.h0s = h0s;
  out.h1s = h1s;
  out.sub0 = rec0;
  out.sub1 = rec1;
  out.hinfs = h0s + h1s;
  auto nonconstant = [](const RatFun& h, const char* which) {
    if (h.is_constant())
      fail(errc::disconnected_cover,
           std::string("the reduced ") + which +
               " is constant: the corresponding Z/2 subcover splits");
  };
  nonconstant(out.h0s, "h0");
  nonconstant(out.h1s, "h1");
  nonconstant(out.hinfs, "h_inf = h0 + h1");
  return out;
}

bool is_odd_only(const RatFun& h, const SplitData& split) {
  PartialFractions pf = partial_fractions(h, split);
  for (int d = 2; d <= pf.polypart.deg(); ++d)
    if (d % 2 == 0 && pf.polypart.coeff_bits(d) != 0) return false;
  for (const auto& part : pf.parts)
    for (size_t j = 2; j <= part.coeffs.size(); ++j)
      if (j % 2 == 0 && !part.coeffs[j - 1].is_zero()) return false;
  return true;
}

} // namespace kleindr

#ifndef KLEINDR_ASFORM_HPP
#define KLEINDR_ASFORM_HPP

#include "kleindr/ratfun.hpp"

namespace kleindr {

// Record of the substitution y -> y + s applied while reducing an
// Artin--Schreier right-hand side.  Invariant: h + s^2 + s = h_red.
struct SubstRecord {
  RatFun s;
  struct LogEntry {
    PointDesc at;
    int exponent; // the even exponent that was removed
    FieldElem coeff;
  };
  std::vector<LogEntry> log;
};

// Kill every even-exponent principal-part term and every even-degree
// polynomial term (>= 2) of h.  Constants may remain.  The cascade is
// finite: removing c*u^(-2j) injects only exponent-j terms.
std::pair<RatFun, SubstRecord> canonical_odd_form(const RatFun& h, const SplitData& split);

// helper shared with the HKG side: reduce a polynomial to odd-degree
// monomials + constant; returns (reduced, beta) with p + beta^2 + beta = reduced
std::pair<Poly, Poly> odd_form_poly(const Poly& p);

struct StandardTriple {
  FieldCtxPtr ctx; // possibly an extension of the input field
  RatFun h0s, h1s, hinfs;
  SubstRecord sub0, sub1;
  SplitData split; // covers den(h0s) * den(h1s)
  bool extended = false;
};

// Reduce h0 and h1 independently; h_inf = h0s + h1s is then odd-only as
// well (sums of odd-only tails stay odd-only).  DisconnectedCover when
// any of the three reduced functions is constant.
StandardTriple global_standard_form(const RatFun& h0, const RatFun& h1,
                                    int cap = FieldCtx::kDefaultDegreeCap);

bool is_odd_only(const RatFun& h, const SplitData& split); // diagnostic used by tests

} // namespace kleindr

#endif

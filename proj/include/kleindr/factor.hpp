#ifndef KLEINDR_FACTOR_HPP
#define KLEINDR_FACTOR_HPP

#include "kleindr/poly.hpp"

namespace kleindr {

// Complete factorization into monic irreducibles, unit out front.
// factors are sorted (degree, then lexicographic) so results are stable
// regardless of the random splitting path.
struct FactorList {
  FieldElem unit;
  std::vector<std::pair<Poly, int>> factors;

  Poly reassemble() const;
};

FactorList poly_factor(const Poly& f);

// Field containing every root of f, plus the roots with multiplicity,
// sorted by bit value.  ext may be the input field itself.
struct SplitData {
  FieldCtxPtr ext;
  std::vector<std::pair<FieldElem, int>> roots;
};

SplitData splitting_data(const Poly& f, int cap = FieldCtx::kDefaultDegreeCap);

} // namespace kleindr

#endif

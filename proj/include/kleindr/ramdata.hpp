#ifndef KLEINDR_RAMDATA_HPP
#define KLEINDR_RAMDATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "kleindr/ratfun.hpp"

namespace kleindr {

// Stabilizer / filtration labels.  H0 = <tau>, H1 = <sigma>,
// Hinf = <sigma tau>; V4 appears as a class and as the B' label of
// points with equal jumps.
enum class StabClass : int { H0 = 0, H1 = 1, Hinf = 2, V4 = 3 };

const char* stab_name(StabClass c);
std::optional<StabClass> stab_from_name(const std::string& s);

struct Classify {
  bool ramified = false;
  StabClass cls = StabClass::V4;    // stabilizer G_Q
  StabClass bprime = StabClass::V4; // last nontrivial filtration group
  int m = 1;                        // min jump, clamped below by 1
  int M = 1;                        // max jump, clamped below by 1
};

// Decide the branch class of a point from the orders of (h0, h1, hinf)
// there.  Orders must come from a standard triple: each is >= 0 (or the
// ORD_INF sentinel) or an odd negative, and the largest pole is attained
// at least twice.  InconsistentTriple otherwise.
Classify classify_point(int ord0, int ord1, int ordinf);

struct Filtration {
  int e = 1;                 // ramification index
  std::vector<int> jumps;    // indices i with G_i != G_{i+1}
  int d = 0, dprime = 0, dsecond = 0;
};

// Lower ramification filtration and different exponents from (cls,
// bprime, m, M); the sum over the explicit filtration is cross-checked
// against the closed forms.
Filtration filtration(StabClass cls, StabClass bprime, int m, int M);

struct BranchPoint {
  std::string location; // "inf", a field element literal, or an abstract label
  Classify cl;
  Filtration fil;
  std::optional<std::array<int, 3>> raw_ords; // kept for the report

  void validate() const; // the (cls, bprime, m, M, d) consistency rules
};

BranchPoint make_branch_point(std::string location, const Classify& cl,
                              std::optional<std::array<int, 3>> raw = std::nullopt);

struct BranchTable {
  long g_Y = 0;
  std::vector<BranchPoint> entries;

  long count_class(StabClass c) const;
};

// 2 g_X - 2 = 4 (2 g_Y - 2) + sum_Q (4 / e_Q) d_Q
long genus_rh(const BranchTable& table);

} // namespace kleindr

#endif

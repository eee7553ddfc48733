#ifndef KLEINDR_KLEINREP_HPP
#define KLEINDR_KLEINREP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "kleindr/matrix.hpp"
#include "kleindr/rng.hpp"

namespace kleindr {

// The seven indecomposable k[V4]-modules that can occur in H^1_dR.
enum class Indec : int { Triv = 0, Reg = 1, N0 = 2, N1 = 3, Ninf = 4, M31 = 5, M32 = 6 };

inline constexpr int kNumIndec = 7;
inline constexpr std::array<Indec, kNumIndec> kAllIndec = {
    Indec::Triv, Indec::Reg, Indec::N0, Indec::N1, Indec::Ninf, Indec::M31, Indec::M32};

int indec_dim(Indec t);
const char* indec_name(Indec t); // "k", "kV4", "N0", "N1", "Ninf", "M31", "M32"
Indec dual_type(Indec t);        // swaps M31 <-> M32, fixes the rest

// Multiset of multiplicities over the seven types.
struct Decomp {
  std::array<std::int64_t, kNumIndec> m{};

  std::int64_t& operator[](Indec t) { return m[static_cast<int>(t)]; }
  std::int64_t operator[](Indec t) const { return m[static_cast<int>(t)]; }
  std::int64_t dim() const;
  bool operator==(const Decomp&) const = default;
  Decomp& operator+=(const Decomp& o);
  friend Decomp operator+(Decomp a, const Decomp& b) { return a += b; }
  Decomp dual_relabel() const;
  std::string str() const; // "N0^6 + M31^4 + M32^4", "0" when empty
};

// A finite-dimensional k[V4]-module: the commuting involution matrices
// of sigma and tau.  Conventions: H0 = <tau>, H1 = <sigma>, Hinf = <sigma tau>.
class KleinModule {
public:
  KleinModule(Mat S, Mat T); // rejects non-involutions and non-commuting pairs

  const Mat& S() const { return S_; }
  const Mat& T() const { return T_; }
  Mat ST() const { return S_ * T_; }
  const FieldCtxPtr& ctx() const { return S_.ctx(); }
  int dim() const { return S_.rows(); }

  KleinModule embed_to(const FieldCtxPtr& big) const;

private:
  Mat S_, T_;
};

KleinModule standard_module(Indec t, const FieldCtxPtr& ctx);
KleinModule dual(const KleinModule& V);
KleinModule direct_sum(const std::vector<KleinModule>& parts, const FieldCtxPtr& ctx);
KleinModule direct_sum(const Decomp& d, const FieldCtxPtr& ctx);
KleinModule conjugate(const KleinModule& V, const Mat& P); // P V P^-1

// W is the action of the generator of H on some space; the result is
// Ind_H^{V4} of that H-module (dimension doubles).
KleinModule induced_from(int label /* 0, 1, 2=inf */, const Mat& W);

// (dim, rank(S-I), rank(T-I), rank(ST-I), dim fixed, rank((S-I)(T-I)), dim radical)
struct RankProfile {
  std::array<std::int64_t, 7> v{};
  bool operator==(const RankProfile&) const = default;
};
RankProfile rank_profile(const KleinModule& V);

// dim of {X : X S_V = S_W X, X T_V = T_W X} via the stacked linear system
int hom_dim(const KleinModule& V, const KleinModule& W);

// dim Hom(standard(t), V) for all seven t at once, through rank
// identities (no big nullspace); agrees with hom_dim (tested).
std::array<std::int64_t, kNumIndec> hom_profile(const KleinModule& V);

// basis of Hom(standard(t), V), each element an n x d matrix
std::vector<Mat> hom_basis_from_standard(Indec t, const KleinModule& V);

// 7x7 integer matrix G[i][j] = hom_dim(standard(i), standard(j)); cached
const std::array<std::array<std::int64_t, kNumIndec>, kNumIndec>& gram_matrix();
std::int64_t gram_determinant();

// Solve the Gram system for the multiplicities and verify with an
// explicit isomorphism witness; OutsideClassification if the module is
// not a direct sum of the seven types.
Decomp multiplicities(const KleinModule& V);
// non-throwing variant; also hands back the witness direct_sum(m) -> V
std::optional<Decomp> try_multiplicities(const KleinModule& V, Mat* witness = nullptr,
                                         std::string* why = nullptr);

struct IsoResult {
  enum class Status { isomorphic, not_isomorphic, inconclusive };
  Status status;
  std::optional<Mat> witness; // X: V -> W with X S_V = S_W X, X T_V = T_W X
};
IsoResult iso_check(const KleinModule& V, const KleinModule& W);

} // namespace kleindr

#endif

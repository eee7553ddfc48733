#ifndef KLEINDR_GF2K_HPP
#define KLEINDR_GF2K_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kleindr/errors.hpp"

namespace kleindr {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// GF(2^k), 1 <= k <= 64.  Elements are coefficient bit vectors of the
// residue class, bit i = coefficient of g^i.  Immutable after
// construction and freely shared across threads.
class FieldCtx {
public:
  int k() const { return k_; }
  // modulus with the leading g^k bit stripped; bit k is implicit
  std::uint64_t modulus_low() const { return mod_low_; }
  std::uint64_t mask() const { return mask_; }

  bool same(const FieldCtx& other) const { return k_ == other.k_ && mod_low_ == other.mod_low_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0;
    std::uint64_t top = std::uint64_t(1) << (k_ - 1);
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      bool carry = (a & top) != 0;
      a = (a << 1) & mask_;
      if (carry) a ^= mod_low_;
    }
    return r;
  }

  std::uint64_t sqr(std::uint64_t a) const { return mul(a, a); }

  std::uint64_t pow2k_cycle(std::uint64_t a, int times) const {
    for (int i = 0; i < times; ++i) a = sqr(a);
    return a;
  }

  // a^(2^k - 2); the inverse for a != 0
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of 0 in GF(2^" + std::to_string(k_) + ")");
    std::uint64_t r = 1, t = a;
    for (int i = 1; i < k_; ++i) {
      t = sqr(t);
      r = mul(r, t);
    }
    return r;
  }

  // every element is a square; sqrt(a) = a^(2^(k-1))
  std::uint64_t sqrt(std::uint64_t a) const { return pow2k_cycle(a, k_ - 1); }

  std::string elem_to_string(std::uint64_t a) const;

  // construction goes through field_make so the modulus is always verified
  static FieldCtxPtr make(int k, std::optional<std::uint64_t> modulus_low_with_top = std::nullopt,
                          int cap = kDefaultDegreeCap);

  static constexpr int kDefaultDegreeCap = 64;

private:
  FieldCtx(int k, std::uint64_t mod_low) : k_(k), mod_low_(mod_low) {
    mask_ = (k_ == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << k_) - 1);
  }

  int k_;
  std::uint64_t mod_low_;
  std::uint64_t mask_;
};

inline FieldCtxPtr field_make(int k, std::optional<std::uint64_t> modulus = std::nullopt,
                              int cap = FieldCtx::kDefaultDegreeCap) {
  return FieldCtx::make(k, modulus, cap);
}

// A value of some GF(2^k).  Mixing contexts is a hard error, never a
// silent coercion: splitting-field bookkeeping depends on it.
class FieldElem {
public:
  FieldElem() = default;
  FieldElem(FieldCtxPtr ctx, std::uint64_t bits) : ctx_(std::move(ctx)), bits_(bits) {}

  const FieldCtxPtr& ctx() const { return ctx_; }
  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return FieldElem(a.ctx_, a.bits_ ^ b.bits_);
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return FieldElem(a.ctx_, a.ctx_->mul(a.bits_, b.bits_));
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return FieldElem(a.ctx_, a.ctx_->mul(a.bits_, a.ctx_->inv(b.bits_)));
  }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    require_same(a, b);
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  FieldElem inv() const { return FieldElem(ctx_, ctx_->inv(bits_)); }
  FieldElem sqrt() const { return FieldElem(ctx_, ctx_->sqrt(bits_)); }

  std::string str() const { return ctx_->elem_to_string(bits_); }

private:
  static void require_same(const FieldElem& a, const FieldElem& b) {
    if (!a.ctx_ || !b.ctx_) fail(errc::internal, "field element without context");
    if (!a.ctx_->same(*b.ctx_))
      fail(errc::field_mismatch, "arithmetic mixes GF(2^" + std::to_string(a.ctx_->k()) +
                                     ") and GF(2^" + std::to_string(b.ctx_->k()) +
                                     ") without an explicit embedding");
  }

  FieldCtxPtr ctx_;
  std::uint64_t bits_ = 0;
};

inline FieldElem fe(const FieldCtxPtr& ctx, std::uint64_t bits) { return FieldElem(ctx, bits); }
inline FieldElem fe_zero(const FieldCtxPtr& ctx) { return FieldElem(ctx, 0); }
inline FieldElem fe_one(const FieldCtxPtr& ctx) { return FieldElem(ctx, 1); }

// op dispatcher used by a couple of generic call sites and tests
enum class FeOp { add, mul, div };
FieldElem fe_arith(const FieldElem& a, const FieldElem& b, FeOp op);

// Image of `a` under the fixed embedding of its field into `big`
// (big.k() must be a multiple of a.ctx()->k()).  The embedding maps the
// small generator to the smallest root (by bit value) of the small
// modulus in the big field; it is a ring homomorphism fixing GF(2).
// Implemented in factor.cpp (root finding needs the factorization
// machinery).
FieldElem embed(const FieldElem& a, const FieldCtxPtr& big);

} // namespace kleindr

#endif

#ifndef KLEINDR_MATRIX_HPP
#define KLEINDR_MATRIX_HPP

#include <optional>
#include <vector>

#include "kleindr/gf2k.hpp"

namespace kleindr {

class Rng;

// Dense matrix over one GF(2^k) context, raw bit entries, row major.
// Dimensions may be zero (empty modules are legal downstream).
class Mat {
public:
  Mat() = default;
  Mat(FieldCtxPtr ctx, int rows, int cols)
      : ctx_(std::move(ctx)), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static Mat identity(const FieldCtxPtr& ctx, int n);
  static Mat random(const FieldCtxPtr& ctx, int rows, int cols, Rng& rng);
  static Mat random_invertible(const FieldCtxPtr& ctx, int n, Rng& rng);

  const FieldCtxPtr& ctx() const { return ctx_; }
  int rows() const { return r_; }
  int cols() const { return c_; }

  std::uint64_t& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  std::uint64_t at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.ctx_->same(*b.ctx_) && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat transpose() const;
  Mat embed_to(const FieldCtxPtr& big) const;
  bool is_identity() const;
  bool is_zero() const;

  int rank() const;
  // basis of {v : Av = 0} as columns of a cols x nullity matrix
  Mat kernel() const;
  std::optional<Mat> inverse() const;

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);
  static Mat block_diag(const std::vector<Mat>& blocks, const FieldCtxPtr& ctx);

private:
  FieldCtxPtr ctx_;
  int r_ = 0, c_ = 0;
  std::vector<std::uint64_t> a_;
};

} // namespace kleindr

#endif

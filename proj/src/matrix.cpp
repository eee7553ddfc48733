#include "kleindr/matrix.hpp"

#include "kleindr/rng.hpp"

namespace kleindr {

Mat Mat::identity(const FieldCtxPtr& ctx, int n) {
  Mat m(ctx, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::random(const FieldCtxPtr& ctx, int rows, int cols, Rng& rng) {
  Mat m(ctx, rows, cols);
  for (auto& v : m.a_) v = rng.next() & ctx->mask();
  return m;
}

Mat Mat::random_invertible(const FieldCtxPtr& ctx, int n, Rng& rng) {
  for (;;) {
    Mat m = random(ctx, n, n, rng);
    if (m.rank() == n) return m;
  }
}

Mat operator+(const Mat& a, const Mat& b) {
  check_internal(a.r_ == b.r_ && a.c_ == b.c_, "matrix shape mismatch in +");
  Mat m = a;
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] ^= b.a_[i];
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  check_internal(a.c_ == b.r_, "matrix shape mismatch in *");
  const FieldCtx& F = *a.ctx_;
  Mat m(a.ctx_, a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      std::uint64_t v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.c_; ++j) {
        std::uint64_t w = b.at(k, j);
        if (w) m.at(i, j) ^= F.mul(v, w);
      }
    }
  return m;
}

Mat Mat::transpose() const {
  Mat m(ctx_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Mat Mat::embed_to(const FieldCtxPtr& big) const {
  Mat m(big, r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(i, j) = embed(FieldElem(ctx_, at(i, j)), big).bits();
  return m;
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Mat::is_zero() const {
  for (auto v : a_)
    if (v) return false;
  return true;
}

namespace {

// row echelon in place; returns pivot columns
std::vector<int> echelon(Mat& m) {
  const FieldCtx& F = *m.ctx();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    std::uint64_t inv = F.inv(m.at(row, col));
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = F.mul(m.at(row, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      std::uint64_t f = m.at(i, col);
      if (f == 0) continue;
      for (int j = col; j < m.cols(); ++j) m.at(i, j) ^= F.mul(f, m.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

int Mat::rank() const {
  Mat m = *this;
  return static_cast<int>(echelon(m).size());
}

Mat Mat::kernel() const {
  Mat m = *this;
  std::vector<int> pivots = echelon(m);
  std::vector<bool> is_pivot(c_, false);
  for (int p : pivots) is_pivot[p] = true;
  int nullity = c_ - static_cast<int>(pivots.size());
  Mat basis(ctx_, c_, nullity);
  int out = 0;
  for (int freecol = 0; freecol < c_; ++freecol) {
    if (is_pivot[freecol]) continue;
    basis.at(freecol, out) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      basis.at(pivots[pi], out) = m.at(static_cast<int>(pi), freecol); // char 2: -v = v
    ++out;
  }
  return basis;
}

std::optional<Mat> Mat::inverse() const {
  check_internal(r_ == c_, "inverse of a non-square matrix");
  Mat aug = hstack(*this, identity(ctx_, r_));
  std::vector<int> pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) < r_) return std::nullopt;
  Mat inv(ctx_, r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
  return inv;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  check_internal(a.r_ == b.r_, "hstack row mismatch");
  Mat m(a.ctx_, a.r_, a.c_ + b.c_);
  for (int i = 0; i < a.r_; ++i) {
    for (int j = 0; j < a.c_; ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.c_; ++j) m.at(i, a.c_ + j) = b.at(i, j);
  }
  return m;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  check_internal(a.c_ == b.c_, "vstack column mismatch");
  Mat m(a.ctx_, a.r_ + b.r_, a.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int j = 0; j < a.c_; ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.r_; ++i)
    for (int j = 0; j < b.c_; ++j) m.at(a.r_ + i, j) = b.at(i, j);
  return m;
}

Mat Mat::block_diag(const std::vector<Mat>& blocks, const FieldCtxPtr& ctx) {
  int n = 0, c = 0;
  for (const auto& b : blocks) {
    n += b.rows();
    c += b.cols();
  }
  Mat m(ctx, n, c);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

} // namespace kleindr

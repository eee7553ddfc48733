#include "kleindr/poly.hpp"

#include <sstream>

namespace kleindr {

Poly Poly::monomial(const FieldCtxPtr& ctx, std::uint64_t coeff_bits, int degree) {
  if (coeff_bits == 0) return Poly(ctx);
  std::vector<std::uint64_t> c(degree + 1, 0);
  c[degree] = coeff_bits;
  return Poly(ctx, std::move(c));
}

void Poly::set_coeff(int i, std::uint64_t bits) {
  if (i >= static_cast<int>(c_.size())) {
    if (bits == 0) return;
    c_.resize(i + 1, 0);
  }
  c_[i] = bits;
  trim();
}

Poly operator+(const Poly& a, const Poly& b) {
  a.require_same(b);
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = (i < a.c_.size() ? a.c_[i] : 0) ^ (i < b.c_.size() ? b.c_[i] : 0);
  return Poly(a.ctx_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
  std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  const FieldCtx& F = *a.ctx_;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      c[i + j] ^= F.mul(a.c_[i], b.c_[j]);
    }
  }
  return Poly(a.ctx_, std::move(c));
}

Poly Poly::scaled(const FieldElem& s) const {
  if (!ctx_->same(*s.ctx())) fail(errc::field_mismatch, "scalar from a different field");
  if (s.is_zero()) return Poly(ctx_);
  std::vector<std::uint64_t> c(c_);
  for (auto& v : c) v = ctx_->mul(v, s.bits());
  return Poly(ctx_, std::move(c));
}

Poly Poly::shifted_up(int n) const {
  if (is_zero()) return *this;
  std::vector<std::uint64_t> c(c_.size() + n, 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i + n] = c_[i];
  return Poly(ctx_, std::move(c));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  require_same(d);
  if (d.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  if (deg() < d.deg()) return {Poly(ctx_), *this};
  const FieldCtx& F = *ctx_;
  std::uint64_t lc_inv = F.inv(d.c_.back());
  std::vector<std::uint64_t> rem(c_);
  std::vector<std::uint64_t> quo(deg() - d.deg() + 1, 0);
  for (int i = deg(); i >= d.deg(); --i) {
    std::uint64_t top = rem[i];
    if (top == 0) continue;
    std::uint64_t f = F.mul(top, lc_inv);
    quo[i - d.deg()] = f;
    for (int j = 0; j <= d.deg(); ++j) rem[i - d.deg() + j] ^= F.mul(f, d.c_[j]);
  }
  return {Poly(ctx_, std::move(quo)), Poly(ctx_, std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lc().inv());
}

Poly Poly::derivative() const {
  // characteristic 2: d/dx x^i = x^(i-1) for odd i, 0 for even i
  if (deg() < 1) return Poly(ctx_);
  std::vector<std::uint64_t> c(c_.size() - 1, 0);
  for (size_t i = 1; i < c_.size(); i += 2) c[i - 1] = c_[i];
  return Poly(ctx_, std::move(c));
}

Poly Poly::pow(long n) const {
  Poly r = Poly::constant(ctx_, 1);
  Poly b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

FieldElem Poly::eval(const FieldElem& at) const {
  if (!ctx_->same(*at.ctx())) fail(errc::field_mismatch, "evaluation point from a different field");
  std::uint64_t acc = 0;
  for (int i = deg(); i >= 0; --i) acc = ctx_->mul(acc, at.bits()) ^ c_[i];
  return FieldElem(ctx_, acc);
}

Poly Poly::shift_point(const FieldElem& q) const {
  // Horner on x = (t + q): p(t + q)
  Poly acc(ctx_);
  Poly lin(ctx_, {q.bits(), 1});
  for (int i = deg(); i >= 0; --i) {
    acc = acc * lin;
    acc.set_coeff(0, acc.coeff_bits(0) ^ c_[i]);
  }
  return acc;
}

Poly Poly::reversed() const {
  std::vector<std::uint64_t> c(c_.rbegin(), c_.rend());
  return Poly(ctx_, std::move(c));
}

Poly Poly::coeff_sqrt() const {
  std::vector<std::uint64_t> c((c_.size() + 1) / 2, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i % 2 == 1) {
      if (c_[i] != 0) fail(errc::internal, "coeff_sqrt on a polynomial with odd-degree terms");
    } else {
      c[i / 2] = ctx_->sqrt(c_[i]);
    }
  }
  return Poly(ctx_, std::move(c));
}

Poly Poly::embed_to(const FieldCtxPtr& big) const {
  std::vector<std::uint64_t> c(c_.size(), 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i] = embed(FieldElem(ctx_, c_[i]), big).bits();
  return Poly(big, std::move(c));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    std::string coeff = ctx_->elem_to_string(c_[i]);
    bool multi = coeff.find('+') != std::string::npos;
    if (i == 0) {
      out << coeff;
    } else {
      if (coeff != "1") out << (multi ? "(" + coeff + ")" : coeff) << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

bool Poly::lex_less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i)
    if (a.coeff_bits(i) != b.coeff_bits(i)) return a.coeff_bits(i) < b.coeff_bits(i);
  return false;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

} // namespace kleindr

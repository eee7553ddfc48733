#include "kleindr/kleinrep.hpp"

#include <mutex>
#include <sstream>

namespace kleindr {

int indec_dim(Indec t) {
  switch (t) {
    case Indec::Triv: return 1;
    case Indec::Reg: return 4;
    case Indec::N0:
    case Indec::N1:
    case Indec::Ninf: return 2;
    case Indec::M31:
    case Indec::M32: return 3;
  }
  return 0;
}

const char* indec_name(Indec t) {
  switch (t) {
    case Indec::Triv: return "k";
    case Indec::Reg: return "kV4";
    case Indec::N0: return "N0";
    case Indec::N1: return "N1";
    case Indec::Ninf: return "Ninf";
    case Indec::M31: return "M31";
    case Indec::M32: return "M32";
  }
  return "?";
}

Indec dual_type(Indec t) {
  if (t == Indec::M31) return Indec::M32;
  if (t == Indec::M32) return Indec::M31;
  return t;
}

std::int64_t Decomp::dim() const {
  std::int64_t d = 0;
  for (Indec t : kAllIndec) d += (*this)[t] * indec_dim(t);
  return d;
}

Decomp& Decomp::operator+=(const Decomp& o) {
  for (int i = 0; i < kNumIndec; ++i) m[i] += o.m[i];
  return *this;
}

Decomp Decomp::dual_relabel() const {
  Decomp d;
  for (Indec t : kAllIndec) d[dual_type(t)] = (*this)[t];
  return d;
}

std::string Decomp::str() const {
  std::ostringstream out;
  bool first = true;
  for (Indec t : kAllIndec) {
    std::int64_t c = (*this)[t];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << indec_name(t);
    if (c != 1) out << "^" << c;
  }
  return first ? "0" : out.str();
}

KleinModule::KleinModule(Mat S, Mat T) : S_(std::move(S)), T_(std::move(T)) {
  if (S_.rows() != S_.cols() || T_.rows() != T_.cols() || S_.rows() != T_.rows() ||
      !S_.ctx()->same(*T_.ctx()))
    fail(errc::bad_module, "sigma and tau matrices must be square of equal size over one field");
  if (!(S_ * S_).is_identity()) fail(errc::bad_module, "sigma matrix is not an involution");
  if (!(T_ * T_).is_identity()) fail(errc::bad_module, "tau matrix is not an involution");
  if (S_ * T_ != T_ * S_) fail(errc::bad_module, "sigma and tau matrices do not commute");
}

KleinModule KleinModule::embed_to(const FieldCtxPtr& big) const {
  return KleinModule(S_.embed_to(big), T_.embed_to(big));
}

namespace {

Mat from_rows(const FieldCtxPtr& ctx, std::initializer_list<std::initializer_list<int>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows.begin()->size()) : 0;
  Mat m(ctx, r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) m.at(i, j++) = static_cast<std::uint64_t>(v);
    ++i;
  }
  return m;
}

} // namespace

KleinModule standard_module(Indec t, const FieldCtxPtr& ctx) {
  switch (t) {
    case Indec::Triv:
      return KleinModule(Mat::identity(ctx, 1), Mat::identity(ctx, 1));
    case Indec::Reg: {
      // left multiplication on the basis (e, sigma, tau, sigma tau)
      Mat S = from_rows(ctx, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
      Mat T = from_rows(ctx, {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
      return KleinModule(S, T);
    }
    case Indec::N0:
      return KleinModule(from_rows(ctx, {{1, 1}, {0, 1}}), Mat::identity(ctx, 2));
    case Indec::N1:
      return KleinModule(Mat::identity(ctx, 2), from_rows(ctx, {{1, 1}, {0, 1}}));
    case Indec::Ninf:
      return KleinModule(from_rows(ctx, {{1, 1}, {0, 1}}), from_rows(ctx, {{1, 1}, {0, 1}}));
    case Indec::M31:
      return KleinModule(from_rows(ctx, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}),
                         from_rows(ctx, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
    case Indec::M32:
      return KleinModule(from_rows(ctx, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}),
                         from_rows(ctx, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}));
  }
  fail(errc::internal, "bad Indec");
}

KleinModule dual(const KleinModule& V) {
  // group elements are involutions, so inverse-transpose = transpose
  return KleinModule(V.S().transpose(), V.T().transpose());
}

KleinModule direct_sum(const std::vector<KleinModule>& parts, const FieldCtxPtr& ctx) {
  std::vector<Mat> ss, ts;
  for (const auto& p : parts) {
    ss.push_back(p.S());
    ts.push_back(p.T());
  }
  return KleinModule(Mat::block_diag(ss, ctx), Mat::block_diag(ts, ctx));
}

KleinModule direct_sum(const Decomp& d, const FieldCtxPtr& ctx) {
  std::vector<KleinModule> parts;
  for (Indec t : kAllIndec)
    for (std::int64_t i = 0; i < d[t]; ++i) parts.push_back(standard_module(t, ctx));
  return direct_sum(parts, ctx);
}

KleinModule conjugate(const KleinModule& V, const Mat& P) {
  auto inv = P.inverse();
  check_internal(inv.has_value(), "conjugating by a singular matrix");
  return KleinModule(P * V.S() * *inv, P * V.T() * *inv);
}

KleinModule induced_from(int label, const Mat& W) {
  if (!(W * W).is_identity()) fail(errc::bad_module, "induced_from needs an involution");
  const FieldCtxPtr& ctx = W.ctx();
  int n = W.rows();
  Mat Z(ctx, n, n);
  Mat I = Mat::identity(ctx, n);
  Mat gen = Mat::vstack(Mat::hstack(W, Z), Mat::hstack(Z, W));   // the generator of H
  Mat swp = Mat::vstack(Mat::hstack(Z, I), Mat::hstack(I, Z));   // a coset representative
  Mat swpw = Mat::vstack(Mat::hstack(Z, W), Mat::hstack(W, Z));  // rep times generator
  switch (label) {
    case 0: return KleinModule(swp, gen);   // H0 = <tau>
    case 1: return KleinModule(gen, swp);   // H1 = <sigma>
    case 2: return KleinModule(swp, swpw);  // Hinf = <sigma tau>: sigma tau = gen
    default: fail(errc::usage_error, "induced_from label must be 0, 1 or 2");
  }
}

RankProfile rank_profile(const KleinModule& V) {
  const FieldCtxPtr& ctx = V.ctx();
  int n = V.dim();
  Mat I = Mat::identity(ctx, n);
  Mat SI = V.S() + I, TI = V.T() + I, STI = V.ST() + I;
  RankProfile p;
  p.v[0] = n;
  p.v[1] = SI.rank();
  p.v[2] = TI.rank();
  p.v[3] = STI.rank();
  p.v[4] = n - Mat::vstack(SI, TI).rank();
  p.v[5] = (SI * TI).rank();
  p.v[6] = Mat::hstack(Mat::hstack(SI, TI), STI).rank();
  return p;
}

int hom_dim(const KleinModule& V, const KleinModule& W) {
  if (!V.ctx()->same(*W.ctx())) fail(errc::field_mismatch, "hom_dim over different fields");
  int v = V.dim(), w = W.dim();
  if (v == 0 || w == 0) return 0;
  // unknowns X (w x v), index i*v + j; rows: the two commutation identities
  Mat sys(V.ctx(), 2 * w * v, w * v);
  auto emit = [&](int row0, const Mat& MV, const Mat& MW) {
    // X * MV + MW * X = 0
    for (int a = 0; a < w; ++a)
      for (int b = 0; b < v; ++b) {
        int row = row0 + a * v + b;
        for (int j = 0; j < v; ++j) sys.at(row, a * v + j) ^= MV.at(j, b);
        for (int i = 0; i < w; ++i) sys.at(row, i * v + b) ^= MW.at(a, i);
      }
  };
  emit(0, V.S(), W.S());
  emit(w * v, V.T(), W.T());
  return w * v - sys.rank();
}

std::array<std::int64_t, kNumIndec> hom_profile(const KleinModule& V) {
  const FieldCtxPtr& ctx = V.ctx();
  int n = V.dim();
  std::array<std::int64_t, kNumIndec> b{};
  if (n == 0) return b;
  Mat I = Mat::identity(ctx, n);
  Mat SI = V.S() + I, TI = V.T() + I, STI = V.ST() + I;
  b[static_cast<int>(Indec::Triv)] = n - Mat::vstack(SI, TI).rank();
  b[static_cast<int>(Indec::Reg)] = n;
  b[static_cast<int>(Indec::N0)] = n - TI.rank();
  b[static_cast<int>(Indec::N1)] = n - SI.rank();
  b[static_cast<int>(Indec::Ninf)] = n - STI.rank();
  b[static_cast<int>(Indec::M32)] = n - (SI * TI).rank();
  Mat Ks = SI.kernel(), Kt = TI.kernel();
  b[static_cast<int>(Indec::M31)] =
      Ks.cols() + Kt.cols() - Mat::hstack(TI * Ks, SI * Kt).rank();
  return b;
}

std::vector<Mat> hom_basis_from_standard(Indec t, const KleinModule& V) {
  KleinModule U = standard_module(t, V.ctx());
  int d = U.dim(), n = V.dim();
  std::vector<Mat> out;
  if (n == 0) return out;
  Mat sys(V.ctx(), 2 * n * d, n * d);
  auto emit = [&](int row0, const Mat& MU, const Mat& MV) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < d; ++b) {
        int row = row0 + a * d + b;
        for (int j = 0; j < d; ++j) sys.at(row, a * d + j) ^= MU.at(j, b);
        for (int i = 0; i < n; ++i) sys.at(row, i * d + b) ^= MV.at(a, i);
      }
  };
  emit(0, U.S(), V.S());
  emit(n * d, U.T(), V.T());
  Mat ker = sys.kernel();
  for (int c = 0; c < ker.cols(); ++c) {
    Mat X(V.ctx(), n, d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) X.at(i, j) = ker.at(i * d + j, c);
    out.push_back(std::move(X));
  }
  return out;
}

const std::array<std::array<std::int64_t, kNumIndec>, kNumIndec>& gram_matrix() {
  static std::array<std::array<std::int64_t, kNumIndec>, kNumIndec> G;
  static std::once_flag flag;
  std::call_once(flag, [] {
    FieldCtxPtr f2 = field_make(1);
    for (int i = 0; i < kNumIndec; ++i)
      for (int j = 0; j < kNumIndec; ++j)
        G[i][j] = hom_dim(standard_module(kAllIndec[i], f2), standard_module(kAllIndec[j], f2));
  });
  return G;
}

namespace {

using i128 = __int128;

// fraction-free Bareiss determinant of an n x n integer matrix
i128 det_bareiss(std::array<std::array<i128, kNumIndec>, kNumIndec> a, int n) {
  i128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

i128 gram_det_with_column(const std::array<std::int64_t, kNumIndec>& b, int col) {
  const auto& G = gram_matrix();
  std::array<std::array<i128, kNumIndec>, kNumIndec> a;
  for (int i = 0; i < kNumIndec; ++i)
    for (int j = 0; j < kNumIndec; ++j) a[i][j] = (j == col) ? i128(b[i]) : i128(G[i][j]);
  return det_bareiss(a, kNumIndec);
}

// smallest extension of base (by divisibility) with at least `elems` elements
FieldCtxPtr sampling_field(const FieldCtxPtr& base, std::int64_t elems) {
  int need = 1;
  while (need < 63 && (std::int64_t(1) << need) < elems) ++need;
  if (base->k() >= need) return base;
  int kk = base->k() * ((need + base->k() - 1) / base->k());
  return field_make(kk);
}

} // namespace

std::int64_t gram_determinant() {
  std::array<std::array<i128, kNumIndec>, kNumIndec> a;
  const auto& G = gram_matrix();
  for (int i = 0; i < kNumIndec; ++i)
    for (int j = 0; j < kNumIndec; ++j) a[i][j] = G[i][j];
  return static_cast<std::int64_t>(det_bareiss(a, kNumIndec));
}

std::optional<Decomp> try_multiplicities(const KleinModule& V, Mat* witness, std::string* why) {
  auto reject = [&](const std::string& msg) -> std::optional<Decomp> {
    if (why) *why = msg;
    return std::nullopt;
  };
  int n = V.dim();
  if (n == 0) {
    if (witness) *witness = Mat(V.ctx(), 0, 0);
    return Decomp{};
  }
  std::array<std::int64_t, kNumIndec> b = hom_profile(V);
  i128 det = gram_determinant();
  check_internal(det != 0, "Hom-Gram matrix is singular");
  Decomp m;
  for (int j = 0; j < kNumIndec; ++j) {
    i128 dj = gram_det_with_column(b, j);
    if (dj % det != 0) return reject("Gram system has a non-integral solution");
    i128 mj = dj / det;
    if (mj < 0) return reject("Gram system has a negative multiplicity");
    m.m[j] = static_cast<std::int64_t>(mj);
  }
  if (m.dim() != n) return reject("multiplicity vector has the wrong total dimension");

  // verification: exhibit an isomorphism direct_sum(m) -> V
  std::vector<std::vector<Mat>> bases(kNumIndec);
  for (int t = 0; t < kNumIndec; ++t) {
    if (m.m[t] == 0) continue;
    bases[t] = hom_basis_from_standard(kAllIndec[t], V);
    if (bases[t].empty()) return reject("no homomorphisms from a required summand");
  }
  FieldCtxPtr ext = sampling_field(V.ctx(), std::max<std::int64_t>(64, 2 * n));
  KleinModule Ve = V.ctx()->same(*ext) ? V : V.embed_to(ext);
  KleinModule We = direct_sum(m, ext);
  std::vector<std::vector<Mat>> ebases(kNumIndec);
  for (int t = 0; t < kNumIndec; ++t)
    for (const auto& B : bases[t]) ebases[t].push_back(V.ctx()->same(*ext) ? B : B.embed_to(ext));

  Rng& rng = global_rng();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat phi(ext, n, n);
    int col = 0;
    for (int t = 0; t < kNumIndec; ++t) {
      int d = indec_dim(kAllIndec[t]);
      for (std::int64_t copy = 0; copy < m.m[t]; ++copy) {
        Mat block(ext, n, d);
        for (const auto& B : ebases[t]) {
          std::uint64_t c = rng.next() & ext->mask();
          if (c == 0) continue;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < d; ++j) block.at(i, j) ^= ext->mul(c, B.at(i, j));
        }
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < d; ++j) phi.at(i, col + j) = block.at(i, j);
        col += d;
      }
    }
    if (!phi.inverse()) continue;
    check_internal(phi * We.S() == Ve.S() * phi && phi * We.T() == Ve.T() * phi,
                   "assembled witness is not equivariant");
    if (witness) *witness = phi;
    return m;
  }
  return reject("no invertible equivariant map to the candidate sum was found");
}

Decomp multiplicities(const KleinModule& V) {
  std::string why;
  auto m = try_multiplicities(V, nullptr, &why);
  if (!m)
    fail(errc::outside_classification,
         "module does not decompose over the seven indecomposable types: " + why);
  return *m;
}

namespace {

std::vector<Mat> generic_hom_basis(const KleinModule& V, const KleinModule& W) {
  int v = V.dim(), w = W.dim();
  Mat sys(V.ctx(), 2 * w * v, w * v);
  auto emit = [&](int row0, const Mat& MV, const Mat& MW) {
    for (int a = 0; a < w; ++a)
      for (int b = 0; b < v; ++b) {
        int row = row0 + a * v + b;
        for (int j = 0; j < v; ++j) sys.at(row, a * v + j) ^= MV.at(j, b);
        for (int i = 0; i < w; ++i) sys.at(row, i * v + b) ^= MW.at(a, i);
      }
  };
  emit(0, V.S(), W.S());
  emit(w * v, V.T(), W.T());
  Mat ker = sys.kernel();
  std::vector<Mat> out;
  for (int c = 0; c < ker.cols(); ++c) {
    Mat X(V.ctx(), w, v);
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < v; ++j) X.at(i, j) = ker.at(i * v + j, c);
    out.push_back(std::move(X));
  }
  return out;
}

bool verify_witness(const Mat& X, const KleinModule& V, const KleinModule& W) {
  return X.inverse().has_value() && X * V.S() == W.S() * X && X * V.T() == W.T() * X;
}

} // namespace

IsoResult iso_check(const KleinModule& V, const KleinModule& W) {
  using Status = IsoResult::Status;
  if (!V.ctx()->same(*W.ctx())) fail(errc::field_mismatch, "iso_check over different fields");
  if (V.dim() != W.dim()) return {Status::not_isomorphic, std::nullopt};
  if (V.dim() == 0) return {Status::isomorphic, Mat(V.ctx(), 0, 0)};
  if (rank_profile(V) != rank_profile(W)) return {Status::not_isomorphic, std::nullopt};
  // Hom dimensions from the standard modules are isomorphism invariants
  // and settle pairs the rank profile cannot (M31+M32 vs N0+N1+Ninf).
  if (hom_profile(V) != hom_profile(W)) return {Status::not_isomorphic, std::nullopt};

  Mat wv, ww;
  auto mv = try_multiplicities(V, &wv);
  auto mw = try_multiplicities(W, &ww);
  if (mv && mw) {
    if (!(*mv == *mw)) return {Status::not_isomorphic, std::nullopt};
    // wv: sum -> V and ww: sum -> W over the same deterministic extension
    auto inv = wv.inverse();
    check_internal(inv.has_value(), "witness lost invertibility");
    Mat X = ww * *inv;
    FieldCtxPtr ext = X.ctx();
    KleinModule Ve = V.ctx()->same(*ext) ? V : V.embed_to(ext);
    KleinModule We = W.ctx()->same(*ext) ? W : W.embed_to(ext);
    check_internal(verify_witness(X, Ve, We), "composed witness failed verification");
    return {Status::isomorphic, X};
  }

  // at least one side is outside the classification: search Hom(V, W)
  int n = V.dim();
  if (n > 32) return {Status::inconclusive, std::nullopt};
  std::vector<Mat> basis = generic_hom_basis(V, W);
  if (basis.empty()) return {Status::not_isomorphic, std::nullopt};
  int h = static_cast<int>(basis.size());
  int k = V.ctx()->k();
  // deterministic fallback when the Hom space is small enough to sweep
  if (static_cast<double>(h) * k <= 20.0) {
    std::uint64_t total = 1;
    for (int i = 0; i < h; ++i) total <<= k;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      Mat X(V.ctx(), n, n);
      std::uint64_t rest = idx;
      for (int i = 0; i < h; ++i) {
        std::uint64_t c = rest & V.ctx()->mask();
        rest >>= k;
        if (c == 0) continue;
        for (int a = 0; a < n; ++a)
          for (int bcol = 0; bcol < n; ++bcol)
            X.at(a, bcol) ^= V.ctx()->mul(c, basis[i].at(a, bcol));
      }
      if (verify_witness(X, V, W)) return {Status::isomorphic, X};
    }
    return {Status::not_isomorphic, std::nullopt};
  }
  FieldCtxPtr ext = sampling_field(V.ctx(), std::max<std::int64_t>(64, 2 * n));
  KleinModule Ve = V.ctx()->same(*ext) ? V : V.embed_to(ext);
  KleinModule We = W.ctx()->same(*ext) ? W : W.embed_to(ext);
  std::vector<Mat> ebasis;
  for (const auto& B : basis) ebasis.push_back(V.ctx()->same(*ext) ? B : B.embed_to(ext));
  Rng& rng = global_rng();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat X(ext, n, n);
    for (const auto& B : ebasis) {
      std::uint64_t c = rng.next() & ext->mask();
      if (c == 0) continue;
      for (int a = 0; a < n; ++a)
        for (int bcol = 0; bcol < n; ++bcol) X.at(a, bcol) ^= ext->mul(c, B.at(a, bcol));
    }
    if (verify_witness(X, Ve, We)) return {Status::isomorphic, X};
  }
  return {Status::inconclusive, std::nullopt};
}

} // namespace kleindr

#include "kleindr/gf2k.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "kleindr/rng.hpp"

namespace kleindr {

namespace {

// ---- GF(2)[x] arithmetic on bit-packed polynomials of degree <= 64 ----
// Used only to vet moduli; field arithmetic proper lives in FieldCtx.

using u128 = unsigned __int128;

int gf2x_deg(u128 a) {
  if (a == 0) return -1;
  int d = 0;
  while (a >> 1) {
    a >>= 1;
    ++d;
  }
  return d;
}

u128 gf2x_mod(u128 a, u128 f) {
  int df = gf2x_deg(f);
  int da = gf2x_deg(a);
  while (da >= df) {
    a ^= f << (da - df);
    da = gf2x_deg(a);
  }
  return a;
}

u128 gf2x_mulmod(u128 a, u128 b, u128 f) {
  u128 r = 0;
  a = gf2x_mod(a, f);
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    a = gf2x_mod(a, f);
  }
  return r;
}

u128 gf2x_gcd(u128 a, u128 b) {
  while (b) {
    a = gf2x_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^n) mod f
u128 gf2x_frob_pow(int n, u128 f) {
  u128 r = 2; // x
  for (int i = 0; i < n; ++i) r = gf2x_mulmod(r, r, f);
  return r;
}

// Rabin's deterministic irreducibility test over GF(2).
bool gf2x_irreducible(u128 f) {
  int k = gf2x_deg(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  if ((f & 1) == 0) return false; // divisible by x
  if (gf2x_frob_pow(k, f) != 2) return false;
  for (int p = 2; p <= k; ++p) {
    if (k % p != 0) continue;
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    u128 h = gf2x_frob_pow(k / p, f) ^ 2; // x^(2^(k/p)) - x
    if (gf2x_deg(gf2x_gcd(h, f)) != 0) return false;
  }
  return true;
}

std::uint64_t smallest_irreducible_low(int k) {
  static std::map<int, std::uint64_t> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  // constant bit must be set (context invariant; also necessary for k >= 2)
  for (std::uint64_t c = 1;; c += 2) {
    u128 f = (u128(1) << k) | c;
    if (gf2x_irreducible(f)) {
      cache[k] = c;
      return c;
    }
    if (k < 64 && c >= (std::uint64_t(1) << k)) break;
  }
  fail(errc::internal, "no irreducible polynomial of degree " + std::to_string(k));
}

} // namespace

FieldCtxPtr FieldCtx::make(int k, std::optional<std::uint64_t> modulus_low, int cap) {
  if (k < 1) fail(errc::usage_error, "field degree must be >= 1");
  if (cap > kDefaultDegreeCap) cap = kDefaultDegreeCap;
  if (k > cap)
    fail(errc::field_too_large,
         "field degree " + std::to_string(k) + " exceeds the cap " + std::to_string(cap));
  std::uint64_t low;
  if (modulus_low) {
    low = *modulus_low;
    std::uint64_t msk = (k == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << k) - 1);
    if ((low & ~msk) != 0)
      fail(errc::reducible_modulus, "modulus has degree other than " + std::to_string(k));
    if ((low & 1) == 0)
      fail(errc::reducible_modulus, "modulus has zero constant term");
    u128 f = (u128(1) << k) | u128(low);
    if (!gf2x_irreducible(f)) fail(errc::reducible_modulus, "modulus is reducible over GF(2)");
  } else {
    low = smallest_irreducible_low(k);
  }
  return FieldCtxPtr(new FieldCtx(k, low));
}

std::string FieldCtx::elem_to_string(std::uint64_t a) const {
  if (a == 0) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = k_ - 1; i >= 0; --i) {
    if (!(a >> i & 1)) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0)
      out << "1";
    else if (i == 1)
      out << "g";
    else
      out << "g^" << i;
  }
  return out.str();
}

FieldElem fe_arith(const FieldElem& a, const FieldElem& b, FeOp op) {
  switch (op) {
    case FeOp::add: return a + b;
    case FeOp::mul: return a * b;
    case FeOp::div: return a / b;
  }
  fail(errc::internal, "bad FeOp");
}

Rng& global_rng() {
  thread_local Rng rng;
  return rng;
}

void set_global_seed(std::uint64_t seed) { global_rng().reseed(seed); }

const char* errc_name(errc kind) {
  switch (kind) {
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::schema_error: return "SchemaError";
    case errc::usage_error: return "UsageError";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::field_too_large: return "FieldTooLarge";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::no_embedding: return "NoEmbedding";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::unsplit_denominator: return "UnsplitDenominator";
    case errc::disconnected_cover: return "DisconnectedCover";
    case errc::trivial_cover: return "TrivialCover";
    case errc::inconsistent_triple: return "InconsistentTriple";
    case errc::non_integral_genus: return "NonIntegralGenus";
    case errc::no_case_matches: return "NoCaseMatches";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::bad_module: return "BadModule";
    case errc::outside_classification: return "OutsideClassification";
    case errc::alpha_search_failed: return "AlphaSearchFailed";
    case errc::basis_range_violation: return "BasisRangeViolation";
    case errc::bad_hkg_input: return "BadHkgInput";
    case errc::check_failed: return "CheckFailed";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

} // namespace kleindr

#include "kleindr/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "kleindr/rng.hpp"

namespace kleindr {

namespace {

Poly random_poly_below(const FieldCtxPtr& ctx, int deg_bound, Rng& rng) {
  std::vector<std::uint64_t> c(deg_bound, 0);
  for (auto& v : c) v = rng.next() & ctx->mask();
  return Poly(ctx, std::move(c));
}

Poly powmod(const Poly& base, const Poly& mod, long e) {
  Poly r = Poly::constant(base.ctx(), 1);
  Poly b = base % mod;
  while (e > 0) {
    if (e & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

// x -> x^(2^n) mod f
Poly frob_iter(const Poly& a, const Poly& f, int n) {
  Poly r = a % f;
  for (int i = 0; i < n; ++i) r = (r * r) % f;
  return r;
}

// Distinct-degree split of a monic squarefree polynomial.
std::vector<std::pair<Poly, int>> ddf(Poly f) {
  std::vector<std::pair<Poly, int>> out;
  int k = f.ctx()->k();
  Poly h = Poly::x(f.ctx()) % f;
  int d = 0;
  while (f.deg() > 0) {
    ++d;
    if (2 * d > f.deg()) {
      out.emplace_back(f, f.deg());
      break;
    }
    h = frob_iter(h, f, k); // h = x^(q^d) mod f
    Poly g = gcd(h + Poly::x(f.ctx()), f);
    if (g.deg() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  return out;
}

// Equal-degree split via the additive GF(2)-trace map
// Tr(c) = sum_{i < k*d} c^(2^i); char-2 Cantor--Zassenhaus.
void edf(const Poly& f, int d, std::vector<Poly>& out) {
  if (f.deg() == d) {
    out.push_back(f.monic());
    return;
  }
  const FieldCtxPtr& ctx = f.ctx();
  int k = ctx->k();
  Rng& rng = global_rng();
  for (;;) {
    Poly c = random_poly_below(ctx, f.deg(), rng);
    if (c.is_zero()) continue;
    Poly tr = Poly::zero(ctx);
    Poly t = c % f;
    for (int i = 0; i < k * d; ++i) {
      tr = tr + t;
      t = (t * t) % f;
    }
    Poly g = gcd(tr, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      edf(g, d, out);
      edf(f / g, d, out);
      return;
    }
  }
}

// Characteristic-2 squarefree decomposition.  Derivative-zero parts are
// perfect squares and recurse through coefficient square roots.
void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (f.deg() <= 0) return;
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree(f.coeff_sqrt(), 2 * mult, out);
    return;
  }
  Poly c = gcd(f, fp);
  Poly w = f / c;
  int i = 1;
  while (w.deg() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.deg() > 0) out.emplace_back(z.monic(), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.deg() > 0) squarefree(c.coeff_sqrt(), 2 * mult, out);
}

} // namespace

Poly FactorList::reassemble() const {
  Poly r = Poly::constant(unit);
  for (const auto& [p, m] : factors) r = r * p.pow(m);
  return r;
}

FactorList poly_factor(const Poly& f) {
  if (f.is_zero()) fail(errc::zero_polynomial, "cannot factor the zero polynomial");
  FactorList result;
  result.unit = f.lc();
  if (f.deg() == 0) return result;

  std::vector<std::pair<Poly, int>> sf;
  squarefree(f.monic(), 1, sf);
  for (const auto& [part, mult] : sf) {
    for (const auto& [prod, d] : ddf(part)) {
      std::vector<Poly> irreds;
      edf(prod, d, irreds);
      for (auto& p : irreds) result.factors.emplace_back(std::move(p), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return Poly::lex_less(a.first, b.first); });

  check_internal(result.reassemble() == f, "factorization does not reassemble");
  return result;
}

SplitData splitting_data(const Poly& f, int cap) {
  FactorList fl = poly_factor(f);
  long lcm_deg = 1;
  for (const auto& [p, m] : fl.factors) lcm_deg = std::lcm<long>(lcm_deg, p.deg());
  long ext_k = lcm_deg * f.ctx()->k();
  SplitData out;
  if (ext_k == f.ctx()->k()) {
    out.ext = f.ctx();
    for (const auto& [p, m] : fl.factors) out.roots.emplace_back(p.coeff(0), m);
  } else {
    if (ext_k > cap)
      fail(errc::field_too_large, "splitting field GF(2^" + std::to_string(ext_k) +
                                      ") exceeds the degree cap " + std::to_string(cap));
    out.ext = field_make(static_cast<int>(ext_k), std::nullopt, cap);
    for (const auto& [p, m] : fl.factors) {
      Poly pe = p.embed_to(out.ext);
      if (pe.deg() == 1) {
        out.roots.emplace_back(pe.coeff(0), m);
        continue;
      }
      std::vector<Poly> linears;
      edf(pe, 1, linears);
      check_internal(static_cast<int>(linears.size()) == pe.deg(),
                     "irreducible factor does not split in the splitting field");
      for (const auto& lin : linears) out.roots.emplace_back(lin.coeff(0), m);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first.bits() < b.first.bits(); });
  long total = 0;
  for (const auto& [r, m] : out.roots) total += m;
  check_internal(total == f.deg(), "splitting data misses roots");
  return out;
}

namespace {

struct EmbedKey {
  int sk;
  std::uint64_t smod;
  int bk;
  std::uint64_t bmod;
  bool operator<(const EmbedKey& o) const {
    return std::tie(sk, smod, bk, bmod) < std::tie(o.sk, o.smod, o.bk, o.bmod);
  }
};

// image of the small generator: smallest root of the small modulus in big
std::uint64_t generator_image(const FieldCtxPtr& small, const FieldCtxPtr& big) {
  static std::map<EmbedKey, std::uint64_t> cache;
  static std::mutex mtx;
  EmbedKey key{small->k(), small->modulus_low(), big->k(), big->modulus_low()};
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // small modulus as a polynomial over the big field (coefficients 0/1)
  std::vector<std::uint64_t> coeffs(small->k() + 1, 0);
  for (int i = 0; i < small->k(); ++i)
    if (small->modulus_low() >> i & 1) coeffs[i] = 1;
  coeffs[small->k()] = 1;
  Poly mu(big, std::move(coeffs));
  std::vector<Poly> linears;
  edf(mu, 1, linears);
  check_internal(static_cast<int>(linears.size()) == small->k(), "modulus does not split in target");
  std::uint64_t best = ~std::uint64_t(0);
  for (const auto& lin : linears) best = std::min(best, lin.coeff_bits(0));
  std::lock_guard<std::mutex> lock(mtx);
  cache[key] = best;
  return best;
}

} // namespace

FieldElem embed(const FieldElem& a, const FieldCtxPtr& big) {
  const FieldCtxPtr& small = a.ctx();
  if (small->same(*big)) return FieldElem(big, a.bits());
  if (big->k() % small->k() != 0)
    fail(errc::no_embedding, "GF(2^" + std::to_string(small->k()) + ") does not embed into GF(2^" +
                                 std::to_string(big->k()) + ")");
  std::uint64_t r = generator_image(small, big);
  std::uint64_t acc = 0;
  for (int i = small->k() - 1; i >= 0; --i) {
    acc = big->mul(acc, r);
    if (a.bits() >> i & 1) acc ^= 1;
  }
  return FieldElem(big, acc);
}

} // namespace kleindr

#ifndef KLEINDR_RNG_HPP
#define KLEINDR_RNG_HPP

#include <cstdint>
#include <random>

namespace kleindr {

// One seeded generator per thread drives every randomized step
// (factorization splitting, iso witnesses, property-test data), so a run
// is reproducible from the job seed alone.  mt19937_64 is fully
// specified by the standard; the bound reduction below avoids the
// implementation-defined std distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

  void reseed(std::uint64_t seed) { eng_.seed(seed); }

  std::uint64_t next() { return eng_(); }

  // uniform in [0, n), n > 0
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  bool coin() { return eng_() & 1; }

  static constexpr std::uint64_t kDefaultSeed = 0x6b6c65696e647221ull;

private:
  std::mt19937_64 eng_;
};

Rng& global_rng();
void set_global_seed(std::uint64_t seed);

} // namespace kleindr

#endif

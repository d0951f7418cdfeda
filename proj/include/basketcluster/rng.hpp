#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace bcl {

// Seedable 64-bit random stream. Every stochastic routine in the library
// draws through this wrapper: mt19937_64 output is fully specified by the
// standard and the helpers below avoid the implementation-defined
// <random> distributions, so a fixed seed reproduces the same results on
// any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Unbiased uniform draw from {0, ..., n-1}; n must be >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n | 1);
    std::uint64_t x = gen_() & mask;
    while (x >= n) x = gen_() & mask;
    return x;
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double real01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return real01() < p; }

 private:
  std::mt19937_64 gen_;
};

// Independent seed for sweep/restart index `index` on top of `base`
// (splitmix64 finalizer). Stable across runs and platforms.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace bcl

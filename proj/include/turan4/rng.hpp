#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace turan4 {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent stream seed for a named component of a run.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view component,
                                 std::uint64_t index = 0) {
  std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
  for (char c : component) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001B3ULL;
  return splitmix64(splitmix64(seed ^ h) + index);
}

/// Uniform integer in [0, bound), bound > 0. Rejection sampling keeps the
/// stream identical across standard libraries.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

/// Uniform double in (0, 1).
inline double uniform_open01(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

template <class Container>
void shuffle(Container& c, Rng& rng) {
  for (std::size_t i = c.size(); i > 1; --i) std::swap(c[i - 1], c[uniform_below(rng, i)]);
}

}  // namespace turan4

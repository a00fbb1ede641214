#pragma once

// Edge-scan kernels used by the independence solver and the verification
// passes. Edges are stored as vertex bitmasks in structure-of-arrays layout:
// word w of edge j lives at data[w * edges + j]. Every backend must produce
// identical results; the active backend is chosen once at startup from the
// CPU features (override with TURAN4_KERNEL=scalar|avx2).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace turan4::kernels {

inline constexpr std::uint8_t kDead = 0xFF;

struct EdgeMaskView {
  std::span<const std::uint64_t> data;
  std::size_t edges = 0;
  std::size_t words = 0;

  const std::uint64_t* word_row(std::size_t w) const { return data.data() + w * edges; }
};

using CountContainedFn = std::size_t (*)(EdgeMaskView, std::span<const std::uint64_t>);
using FirstContainedFn = std::ptrdiff_t (*)(EdgeMaskView, std::span<const std::uint64_t>);
using ResidualSizesFn = void (*)(EdgeMaskView, std::span<const std::uint64_t>,
                                 std::span<const std::uint64_t>, std::span<std::uint8_t>);

struct Backend {
  std::string_view name;
  CountContainedFn count_contained;
  FirstContainedFn first_contained;
  ResidualSizesFn residual_sizes;
};

const Backend& scalar_backend();
/// nullptr when the binary or the CPU lacks AVX2.
const Backend* avx2_backend();

const Backend& active();
/// Selects a backend by name; returns false if it is unavailable.
bool select(std::string_view name);

/// Number of edges e with e ⊆ set.
inline std::size_t count_contained(EdgeMaskView edges, std::span<const std::uint64_t> set) {
  return active().count_contained(edges, set);
}

/// Index of the first edge contained in set, or -1.
inline std::ptrdiff_t first_contained(EdgeMaskView edges, std::span<const std::uint64_t> set) {
  return active().first_contained(edges, set);
}

/// out[j] = |e_j ∩ cand| if e_j ⊆ alive, kDead otherwise.
inline void residual_sizes(EdgeMaskView edges, std::span<const std::uint64_t> alive,
                           std::span<const std::uint64_t> cand, std::span<std::uint8_t> out) {
  active().residual_sizes(edges, alive, cand, out);
}

}  // namespace turan4::kernels

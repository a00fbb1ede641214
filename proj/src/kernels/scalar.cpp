#include <bit>

#include "turan4/kernels.hpp"

namespace turan4::kernels {
namespace {

std::size_t count_contained_scalar(EdgeMaskView edges, std::span<const std::uint64_t> set) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < edges.edges; ++j) {
    std::uint64_t outside = 0;
    for (std::size_t w = 0; w < edges.words; ++w) outside |= edges.word_row(w)[j] & ~set[w];
    count += outside == 0;
  }
  return count;
}

std::ptrdiff_t first_contained_scalar(EdgeMaskView edges, std::span<const std::uint64_t> set) {
  for (std::size_t j = 0; j < edges.edges; ++j) {
    std::uint64_t outside = 0;
    for (std::size_t w = 0; w < edges.words; ++w) outside |= edges.word_row(w)[j] & ~set[w];
    if (outside == 0) return static_cast<std::ptrdiff_t>(j);
  }
  return -1;
}

void residual_sizes_scalar(EdgeMaskView edges, std::span<const std::uint64_t> alive,
                           std::span<const std::uint64_t> cand, std::span<std::uint8_t> out) {
  for (std::size_t j = 0; j < edges.edges; ++j) {
    std::uint64_t outside = 0;
    int inside = 0;
    for (std::size_t w = 0; w < edges.words; ++w) {
      const std::uint64_t e = edges.word_row(w)[j];
      outside |= e & ~alive[w];
      inside += std::popcount(e & cand[w]);
    }
    out[j] = outside ? kDead : static_cast<std::uint8_t>(inside);
  }
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{"scalar", count_contained_scalar, first_contained_scalar,
                               residual_sizes_scalar};
  return backend;
}

}  // namespace turan4::kernels

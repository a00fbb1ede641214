#include "turan4/kernels.hpp"

#if defined(TURAN4_HAVE_AVX2)
#include <immintrin.h>

#include <bit>

namespace turan4::kernels {
namespace {

// Per-lane 64-bit popcount: nibble lookup then horizontal byte sums.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2,
                                       1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0F);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline __m256i outside_block(EdgeMaskView edges, std::span<const std::uint64_t> set, std::size_t j) {
  __m256i outside = _mm256_setzero_si256();
  for (std::size_t w = 0; w < edges.words; ++w) {
    const __m256i e =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(edges.word_row(w) + j));
    const __m256i s = _mm256_set1_epi64x(static_cast<long long>(set[w]));
    outside = _mm256_or_si256(outside, _mm256_andnot_si256(s, e));
  }
  return outside;
}

inline int contained_mask(__m256i outside) {
  const __m256i zero = _mm256_cmpeq_epi64(outside, _mm256_setzero_si256());
  return _mm256_movemask_pd(_mm256_castsi256_pd(zero));
}

std::size_t count_contained_avx2(EdgeMaskView edges, std::span<const std::uint64_t> set) {
  std::size_t count = 0;
  std::size_t j = 0;
  for (; j + 4 <= edges.edges; j += 4) count += std::popcount(static_cast<unsigned>(contained_mask(outside_block(edges, set, j))));
  for (; j < edges.edges; ++j) {
    std::uint64_t outside = 0;
    for (std::size_t w = 0; w < edges.words; ++w) outside |= edges.word_row(w)[j] & ~set[w];
    count += outside == 0;
  }
  return count;
}

std::ptrdiff_t first_contained_avx2(EdgeMaskView edges, std::span<const std::uint64_t> set) {
  std::size_t j = 0;
  for (; j + 4 <= edges.edges; j += 4) {
    const int mask = contained_mask(outside_block(edges, set, j));
    if (mask) return static_cast<std::ptrdiff_t>(j + std::countr_zero(static_cast<unsigned>(mask)));
  }
  for (; j < edges.edges; ++j) {
    std::uint64_t outside = 0;
    for (std::size_t w = 0; w < edges.words; ++w) outside |= edges.word_row(w)[j] & ~set[w];
    if (outside == 0) return static_cast<std::ptrdiff_t>(j);
  }
  return -1;
}

void residual_sizes_avx2(EdgeMaskView edges, std::span<const std::uint64_t> alive,
                         std::span<const std::uint64_t> cand, std::span<std::uint8_t> out) {
  std::size_t j = 0;
  alignas(32) std::uint64_t lanes_out[4];
  alignas(32) std::uint64_t lanes_cnt[4];
  for (; j + 4 <= edges.edges; j += 4) {
    __m256i outside = _mm256_setzero_si256();
    __m256i inside = _mm256_setzero_si256();
    for (std::size_t w = 0; w < edges.words; ++w) {
      const __m256i e =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(edges.word_row(w) + j));
      const __m256i a = _mm256_set1_epi64x(static_cast<long long>(alive[w]));
      const __m256i c = _mm256_set1_epi64x(static_cast<long long>(cand[w]));
      outside = _mm256_or_si256(outside, _mm256_andnot_si256(a, e));
      inside = _mm256_add_epi64(inside, popcount_epi64(_mm256_and_si256(e, c)));
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes_out), outside);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes_cnt), inside);
    for (int l = 0; l < 4; ++l)
      out[j + l] = lanes_out[l] ? kDead : static_cast<std::uint8_t>(lanes_cnt[l]);
  }
  for (; j < edges.edges; ++j) {
    std::uint64_t outside_s = 0;
    int inside_s = 0;
    for (std::size_t w = 0; w < edges.words; ++w) {
      const std::uint64_t e = edges.word_row(w)[j];
      outside_s |= e & ~alive[w];
      inside_s += std::popcount(e & cand[w]);
    }
    out[j] = outside_s ? kDead : static_cast<std::uint8_t>(inside_s);
  }
}

}  // namespace

const Backend* avx2_backend() {
  static const Backend backend{"avx2", count_contained_avx2, first_contained_avx2,
                               residual_sizes_avx2};
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") ? &backend : nullptr;
}

}  // namespace turan4::kernels

#else

namespace turan4::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace turan4::kernels

#endif

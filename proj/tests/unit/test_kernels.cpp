#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "turan4/kernels.hpp"

using namespace turan4;

namespace {

std::vector<std::uint64_t> random_set(std::size_t words, std::size_t n, double p, Rng& rng) {
  std::vector<std::uint64_t> s(words, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (uniform_open01(rng) < p) s[v / 64] |= std::uint64_t{1} << (v % 64);
  return s;
}

}  // namespace

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const kernels::Backend* avx = kernels::avx2_backend();
  if (!avx) {
    MESSAGE("avx2 backend unavailable on this machine");
    return;
  }
  const kernels::Backend& ref = kernels::scalar_backend();
  Rng rng(derive_seed(7, "kernel-equivalence"));
  for (std::size_t n : {5u, 13u, 40u, 64u, 65u, 130u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const double p = n > 40 ? 0.002 : 0.08;
      const FourGraph h = test::random_graph(n, p, rng);
      const EdgeMasks masks(h);
      const auto view = masks.view();
      for (double density : {0.2, 0.6, 0.95}) {
        const auto alive = random_set(masks.word_count(), n, density, rng);
        const auto cand = random_set(masks.word_count(), n, 0.5, rng);
        CHECK(ref.count_contained(view, alive) == avx->count_contained(view, alive));
        CHECK(ref.first_contained(view, alive) == avx->first_contained(view, alive));
        std::vector<std::uint8_t> a(view.edges), b(view.edges);
        ref.residual_sizes(view, alive, cand, a);
        avx->residual_sizes(view, alive, cand, b);
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("scalar kernels match a direct scan") {
  Rng rng(3);
  const FourGraph h = test::random_graph(12, 0.3, rng);
  const EdgeMasks masks(h);
  std::vector<std::uint64_t> set{0b1011'1111'0111};
  std::size_t expected = 0;
  std::ptrdiff_t first = -1;
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    bool inside = true;
    for (Vertex v : h.edges()[j]) inside = inside && ((set[0] >> v) & 1);
    if (inside) {
      if (first < 0) first = static_cast<std::ptrdiff_t>(j);
      ++expected;
    }
  }
  CHECK(kernels::scalar_backend().count_contained(masks.view(), set) == expected);
  CHECK(kernels::scalar_backend().first_contained(masks.view(), set) == first);
}

TEST_CASE("backend selection by name") {
  CHECK(kernels::select("scalar"));
  CHECK(kernels::active().name == "scalar");
  CHECK_FALSE(kernels::select("nonsense"));
  if (kernels::avx2_backend()) {
    CHECK(kernels::select("avx2"));
    CHECK(kernels::active().name == "avx2");
  }
}

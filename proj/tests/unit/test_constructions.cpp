#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "turan4/constructions.hpp"
#include "turan4/error.hpp"

using namespace turan4;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::vector<int> digits(int code, unsigned k) {
  std::vector<int> d(k);
  for (unsigned j = 0; j < k; ++j) d[k - 1 - j] = (code >> (2 * j)) & 3;
  return d;
}

// Colour of a pair: the sum in Z2^2 of the digits at the first disagreement.
int colour(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != b[j]) return a[j] ^ b[j];
  return -1;
}

}  // namespace

TEST_CASE("parity construction has no independent 5-set") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Construction c = parity_construction(ParitySpec::random(5, 5, seed));
    CHECK(alpha_bruteforce(c.graph.graph()).alpha <= 4);
    CHECK(c.census.total() == static_cast<long>(c.graph.edge_count()));
    CHECK(parity_counts(ParitySpec::random(5, 5, seed)).total() == c.census.total());
  }
  const Construction z = parity_construction(ParitySpec::zero(4, 4));
  CHECK(alpha_exact(z.graph.graph()).alpha == 4);
}

TEST_CASE("small constructions") {
  const Construction k5 = k5_line_construction();
  CHECK(k5.graph.vertex_count() == 10);
  CHECK(k5.graph.edge_count() == 20);
  CHECK(alpha_exact(k5.graph.graph()).alpha == 5);

  REQUIRE_FALSE(two_k6_variants().empty());
  const Construction k6 = two_k6_construction(0);
  CHECK(k6.graph.vertex_count() == 12);
  CHECK(k6.graph.edge_count() == 51);
  CHECK(alpha_exact(k6.graph.graph()).alpha == 5);
  CHECK(two_k6_cross_edges().edge_count() == 45);
  CHECK(code_of([] { two_k6_construction(two_k6_variants().size()); }) == ErrorCode::VariantOutOfRange);

  const Construction z = z2cube_construction();
  CHECK(z.graph.vertex_count() == 16);
  CHECK(z.graph.edge_count() == 220);
  CHECK(alpha_exact(z.graph.graph()).alpha == 5);

  const Construction f = fano_complement();
  CHECK(f.graph.edge_count() == 7);
  CHECK(alpha_bruteforce(f.graph.graph()).alpha == 4);
}

TEST_CASE("8-vertex host") {
  const FourGraph host = example1_host();
  CHECK(host.vertex_count() == 8);
  CHECK(host.edge_count() == 14);
  CHECK(alpha_bruteforce(host).alpha == 4);
}

TEST_CASE("expansion census matches the closed form and raises alpha by one") {
  for (std::size_t size : {1u, 2u, 3u}) {
    const ExpansionSpec spec = example1_expansion(size);
    const Construction c = expansion_build(spec);
    CHECK(c.graph.edge_count() == expansion_counts(spec).total());
    for (const auto& [name, count] : expansion_counts(spec).families) CHECK(c.census.get(name) == count);
  }
  const Construction small = expansion_build(example1_expansion(2));
  CHECK(alpha_exact(small.graph.graph()).alpha <= 5);
  const Construction ex2 = expansion_build(example2_expansion(2));
  CHECK(alpha_exact(ex2.graph.graph()).alpha <= 5);
}

TEST_CASE("expansion validation") {
  ExpansionSpec bad = example1_expansion(2);
  bad.crit0[0] = {0, 1};
  CHECK(code_of([&] { expansion_build(bad); }) == ErrorCode::InvalidCriticalSet);

  ExpansionSpec own = example1_expansion(2);
  own.crit0[3] = {3, 4, 5, 6};
  CHECK(code_of([&] { validate_expansion(own); }) == ErrorCode::InvalidCriticalSet);

  ExpansionSpec range = example1_expansion(2);
  range.crit1[0] = {1, 2, 3, 40};
  CHECK(code_of([&] { validate_expansion(range); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("circular construction of the zero-sum cube") {
  const FourGraph cube = zero_sum_cube();
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edge_count() == 14);
  CHECK(alpha_bruteforce(cube).alpha == 4);
  for (std::size_t m = 2; m <= 4; ++m) {
    const CircularSpec spec = zero_sum_circular_spec(m);
    const Construction c = circular_build(spec);
    CHECK(c.graph.vertex_count() == 16 * m);
    CHECK(c.graph.edge_count() == 1244 * m);
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(c.census.get("E1[" + std::to_string(i) + "]") == 772);
      CHECK(c.census.get("E2[" + std::to_string(i) + "]") == 216);
      CHECK(c.census.get("E4[" + std::to_string(i) + "]") == 256);
      CHECK(circular_block(spec, i).size() == 16);
    }
    CHECK(circular_counts(spec).total() == c.census.total());
  }
}

TEST_CASE("circular construction of single-edge parts, checked exhaustively") {
  CircularPart part;
  part.graph = FourGraph::from_edges(4, std::vector<std::vector<Vertex>>{{0, 1, 2, 3}});
  part.first_side = {0, 1};
  part.alpha = 2;
  for (std::size_t m = 2; m <= 5; ++m) {
    const CircularSpec spec{std::vector<CircularPart>(m, part)};
    const Construction c = circular_build(spec);
    CHECK(c.graph.vertex_count() == 4 * m);
    CHECK(c.graph.edge_count() == circular_counts(spec).total());
    const std::size_t exact = alpha_exact(c.graph.graph()).alpha;
    CHECK(exact == alpha_bruteforce(c.graph.graph()).alpha);
    CHECK(exact <= 2 * m);
  }
}

TEST_CASE("circular validation") {
  CHECK(code_of([] { circular_build(zero_sum_circular_spec(1)); }) == ErrorCode::InvalidArgument);
  CircularSpec spec = zero_sum_circular_spec(3);
  spec.parts[1].alpha = 2;
  CHECK(code_of([&] { validate_circular(spec); }) == ErrorCode::HypothesisViolated);
  CircularSpec dup = zero_sum_circular_spec(3);
  dup.parts[0].first_side = {0, 0, 1, 2};
  CHECK(code_of([&] { validate_circular(dup); }) == ErrorCode::PartitionMismatch);
}

TEST_CASE("rainbow triple counts agree with a direct colour check") {
  for (unsigned k = 1; k <= 3; ++k) {
    const int size = 1 << (2 * k);
    long rainbow = 0;
    for (int a = 0; a < size; ++a)
      for (int b = a + 1; b < size; ++b)
        for (int c = b + 1; c < size; ++c) {
          const auto da = digits(a, k), db = digits(b, k), dc = digits(c, k);
          const int x = colour(da, db), y = colour(da, dc), z = colour(db, dc);
          if (x != y && x != z && y != z) ++rainbow;
        }
    CHECK(rainbow_counts(k).rainbow_triples == rainbow);
  }
  CHECK(rainbow_counts(1).rainbow_triples == 4);
  CHECK(rainbow_counts(2).rainbow_triples == 4 * 64 + 4 * 4);
}

TEST_CASE("rainbow H_k") {
  for (unsigned k = 1; k <= 3; ++k) {
    const Construction c = rainbow_build(k);
    CHECK(c.graph.vertex_count() == 4 + (std::size_t{1} << (2 * k)));
    CHECK(c.census.total() == rainbow_counts(k).total());
    CHECK(c.census.get("E1") == rainbow_counts(k).e1);
    CHECK(rainbow_build(k, RainbowPairRule::Swapped).census.total() == c.census.total());
  }
  CHECK(alpha_bruteforce(rainbow_build(1).graph.graph()).alpha == 4);
  const Construction h2 = rainbow_build(2);
  CHECK(alpha_bruteforce(h2.graph.graph()).alpha == 4);
  CHECK(alpha_exact(h2.graph.graph()).alpha == 4);
  CHECK(code_of([] { rainbow_build(4); }) == ErrorCode::DepthTooLargeToMaterialize);
  CHECK(rainbow_counts(12).total() > 0);
}

TEST_CASE("rainbow H_3 has no independent 5-set") {
  const Construction h3 = rainbow_build(3);
  const FourGraph& g = h3.graph.graph();
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  std::size_t independent = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          if (g.has_edge({a, b, c, d})) continue;
          for (Vertex e = d + 1; e < n; ++e)
            if (!g.has_edge({a, b, c, e}) && !g.has_edge({a, b, d, e}) && !g.has_edge({a, c, d, e}) &&
                !g.has_edge({b, c, d, e}))
              ++independent;
        }
  CHECK(independent == 0);
}

TEST_CASE("swapped pair rule leaves an independent 5-set") {
  const Construction h2 = rainbow_build(2, RainbowPairRule::Swapped);
  // w = (0,0) in V'; codes 00, 01, 02 rainbow under a shared first digit; u = 20 on the other side.
  const std::vector<Vertex> set = {*h2.graph.find({0, 0}), *h2.graph.find({1, 0}), *h2.graph.find({1, 1}),
                                   *h2.graph.find({1, 2}), *h2.graph.find({1, 8})};
  CHECK(is_independent(h2.graph.graph(), set));
  CHECK_FALSE(is_independent(rainbow_build(2).graph.graph(), set));
  CHECK(alpha_bruteforce(h2.graph.graph()).alpha == 5);
}

TEST_CASE("H_{m,lambda} formulas") {
  CHECK(hm_edge_formula(4, 1) == 4976);
  CHECK(hm_edge_formula(5, 4) == 2044080);
  for (unsigned lambda = 1; lambda <= 2; ++lambda) {
    const HmSpec spec = HmSpec::first_lambda(4, lambda);
    const Construction c = hm_build(spec);
    CHECK(c.graph.vertex_count() == 64 * lambda);
    CHECK(c.graph.edge_count() == hm_edge_formula(4, lambda));
    for (const auto& [name, count] : hm_type_formula(4, lambda).families) CHECK(c.census.get(name) == count);
  }
  CHECK(code_of([] { hm_edge_formula(3, 1); }) == ErrorCode::MTooSmall);
  CHECK(code_of([] { hm_edge_formula(4, 5); }) == ErrorCode::LambdaOutOfRange);
  HmSpec twice{4, {1, 1}};
  CHECK(code_of([&] { validate_hm(twice); }) == ErrorCode::LambdaOutOfRange);
}

TEST_CASE("H_{m,lambda} sampled invariants") {
  const HmInvariantReport r = hm_invariant_suite(HmSpec::first_lambda(4, 1), 200, 3);
  CHECK(r.samples == 200);
  CHECK(r.violations == 0);
  CHECK(r.min_slack.overall >= 0);
  const HmInvariantReport again = hm_invariant_suite(HmSpec::first_lambda(4, 1), 200, 3);
  CHECK(again.max_set_size == r.max_set_size);
}

TEST_CASE("construction names") {
  const auto& names = construction_names();
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  CHECK(std::find(names.begin(), names.end(), "hm") != names.end());
}

#include <doctest.h>

#include "helpers.hpp"
#include "turan4/alpha_solver.hpp"
#include "turan4/error.hpp"

using namespace turan4;

TEST_CASE("trivial graphs") {
  CHECK(alpha_exact(FourGraph(0)).alpha == 0);
  CHECK(alpha_exact(FourGraph(3)).alpha == 3);
  const std::vector<std::vector<Vertex>> one = {{0, 1, 2, 3}};
  const AlphaResult r = alpha_exact(FourGraph::from_edges(4, one));
  CHECK(r.alpha == 3);
  CHECK(r.status == SolveStatus::Exact);
  CHECK(r.witness.size() == 3);
}

TEST_CASE("complete 4-graph on n vertices has alpha 3") {
  std::vector<Edge> all;
  for (Vertex a = 0; a < 9; ++a)
    for (Vertex b = a + 1; b < 9; ++b)
      for (Vertex c = b + 1; c < 9; ++c)
        for (Vertex d = c + 1; d < 9; ++d) all.push_back({a, b, c, d});
  const FourGraph k9 = FourGraph::from_edges(9, all);
  CHECK(alpha_exact(k9).alpha == 3);
  CHECK(alpha_bruteforce(k9).alpha == 3);
  CHECK(tau(k9, SolveBudget::unbounded()).tau == 6);
}

TEST_CASE("branch and bound equals brute force on random graphs") {
  Rng rng(derive_seed(2024, "unit-alpha"));
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 4 + uniform_below(rng, 11);
    const double p = 0.05 + 0.6 * uniform_open01(rng);
    const FourGraph h = test::random_graph(n, p, rng);
    const AlphaResult fast = alpha_exact(h, SolveBudget::unbounded());
    const AlphaResult slow = alpha_bruteforce(h);
    REQUIRE(fast.status == SolveStatus::Exact);
    CHECK(fast.alpha == slow.alpha);
    CHECK(fast.witness.size() == fast.alpha);
    CHECK(is_independent(h, fast.witness));
    CHECK(is_independent(h, slow.witness));
    CHECK(satisfies_thomasse_yeo(h, fast.alpha));
  }
}

TEST_CASE("scalar and avx2 solvers agree") {
  Rng rng(99);
  const FourGraph h = test::random_graph(20, 0.15, rng);
  REQUIRE(kernels::select("scalar"));
  const AlphaResult a = alpha_exact(h, SolveBudget::unbounded());
  if (kernels::select("avx2")) {
    const AlphaResult b = alpha_exact(h, SolveBudget::unbounded());
    CHECK(a.alpha == b.alpha);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes_explored == b.nodes_explored);
  }
}

TEST_CASE("alpha is monotone under vertex deletion and edge addition") {
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    const FourGraph h = test::random_graph(12, 0.25, rng);
    const std::size_t base = alpha_exact(h).alpha;
    const Vertex v = static_cast<Vertex>(uniform_below(rng, 12));
    const std::size_t without = alpha_exact(remove(h, std::span(&v, 1)).graph).alpha;
    CHECK(without <= base);
    CHECK(without + 1 >= base);

    std::vector<Edge> more(h.edges().begin(), h.edges().end());
    more.push_back({0, 3, 6, 9});
    more.push_back({1, 4, 7, 10});
    CHECK(alpha_exact(FourGraph::from_edges(12, more)).alpha <= base);
  }
}

TEST_CASE("the solver is deterministic") {
  Rng rng(1);
  const FourGraph h = test::random_graph(22, 0.1, rng);
  const AlphaResult a = alpha_exact(h, SolveBudget::unbounded());
  const AlphaResult b = alpha_exact(h, SolveBudget::unbounded());
  CHECK(a.witness == b.witness);
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("budget exhaustion returns a valid lower bound") {
  Rng rng(8);
  const FourGraph h = test::random_graph(30, 0.05, rng);
  SolveBudget tight;
  tight.max_nodes = 3;
  const AlphaResult r = alpha_exact(h, tight);
  CHECK(r.status == SolveStatus::LowerBoundOnly);
  CHECK(r.witness.size() == r.alpha);
  CHECK(is_independent(h, r.witness));
  CHECK(r.alpha <= alpha_exact(h, SolveBudget::unbounded()).alpha);
  CHECK(tau(h, tight).status == SolveStatus::LowerBoundOnly);
}

TEST_CASE("brute force refuses large graphs") {
  try {
    alpha_bruteforce(FourGraph(kBruteForceLimit + 1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLargeForBruteForce);
  }
}

TEST_CASE("greedy maximal independent sets are maximal") {
  Rng rng(21);
  const FourGraph h = test::random_graph(14, 0.3, rng);
  std::vector<Vertex> order = test::iota(14);
  shuffle(order, rng);
  const auto set = greedy_maximal_independent(h, order);
  CHECK(is_independent(h, set));
  for (Vertex v = 0; v < 14; ++v) {
    if (std::find(set.begin(), set.end(), v) != set.end()) continue;
    std::vector<Vertex> bigger = set;
    bigger.push_back(v);
    CHECK_FALSE(is_independent(h, bigger));
  }
}

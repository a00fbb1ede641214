#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "turan4/error.hpp"
#include "turan4/graph_io.hpp"

using namespace turan4;

TEST_CASE("edges are sorted and deduplicated") {
  const std::vector<std::vector<Vertex>> raw = {{3, 2, 1, 0}, {0, 1, 2, 3}, {4, 0, 1, 2}};
  const FourGraph h = FourGraph::from_edges(5, raw);
  REQUIRE(h.edge_count() == 2);
  CHECK(h.edges()[0] == Edge{0, 1, 2, 3});
  CHECK(h.edges()[1] == Edge{0, 1, 2, 4});
  CHECK(h.has_edge({0, 1, 2, 4}));
  CHECK_FALSE(h.has_edge({1, 2, 3, 4}));
}

TEST_CASE("malformed edges are rejected") {
  const std::vector<std::vector<Vertex>> wrong_arity = {{0, 1, 2}};
  const std::vector<std::vector<Vertex>> out_of_range = {{0, 1, 2, 9}};
  const std::vector<std::vector<Vertex>> repeated = {{0, 1, 1, 2}};
  try {
    FourGraph::from_edges(5, wrong_arity);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EdgeArityNot4);
  }
  try {
    FourGraph::from_edges(5, out_of_range);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }
  CHECK_THROWS_AS(FourGraph::from_edges(5, repeated), Error);
}

TEST_CASE("induced and removed subgraphs") {
  Rng rng(11);
  const FourGraph h = test::random_graph(9, 0.4, rng);
  const std::vector<Vertex> keep = {0, 2, 3, 5, 7, 8};
  const InducedGraph sub = induced(h, keep);
  CHECK(sub.graph.vertex_count() == keep.size());
  std::size_t inside = 0;
  for (const Edge& e : h.edges()) {
    bool all = true;
    for (Vertex v : e) all = all && std::find(keep.begin(), keep.end(), v) != keep.end();
    if (all) {
      ++inside;
      Edge mapped{};
      for (int t = 0; t < 4; ++t) mapped[t] = *sub.index_map[e[t]];
      CHECK(sub.graph.has_edge(mapped));
    }
  }
  CHECK(sub.graph.edge_count() == inside);
  CHECK_FALSE(sub.index_map[1].has_value());

  const std::vector<Vertex> drop = {1, 4, 6};
  CHECK(remove(h, drop).graph == sub.graph);
  CHECK(edges_meeting(h, drop) + inside == h.edge_count());
}

TEST_CASE("disjoint union shifts indices") {
  const std::vector<std::vector<Vertex>> one = {{0, 1, 2, 3}};
  const std::vector<FourGraph> parts = {FourGraph::from_edges(4, one), FourGraph::from_edges(5, one)};
  const FourGraph u = disjoint_union(parts);
  CHECK(u.vertex_count() == 9);
  CHECK(u.has_edge({4, 5, 6, 7}));
  CHECK(u.edge_count() == 2);
}

TEST_CASE("incidence lists") {
  const std::vector<std::vector<Vertex>> raw = {{0, 1, 2, 3}, {0, 1, 2, 4}, {1, 2, 3, 4}};
  const FourGraph h = FourGraph::from_edges(6, raw);
  const Incidence inc(h);
  CHECK(inc.degree(0) == 2);
  CHECK(inc.degree(1) == 3);
  CHECK(inc.degree(5) == 0);
  CHECK(inc.of(4).size() == 2);
}

TEST_CASE("labels must be distinct and uniform") {
  const FourGraph h(3);
  CHECK_NOTHROW(LabeledFourGraph(h, {{0, 1}, {0, 2}, {1, 0}}));
  CHECK_THROWS_AS(LabeledFourGraph(h, {{0, 1}, {0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(LabeledFourGraph(h, {{0, 1}, {0}, {1, 0}}), Error);
  const LabeledFourGraph g(h, {{0, 1}, {0, 2}, {1, 0}});
  CHECK(g.find({0, 2}) == Vertex{1});
  CHECK_FALSE(g.find({5, 5}).has_value());
}

TEST_CASE("t4g and json round trips") {
  Rng rng(5);
  const FourGraph h = test::random_graph(10, 0.2, rng);
  std::vector<Label> labels;
  for (int v = 0; v < 10; ++v) labels.push_back({v / 5, v % 5});
  const LabeledFourGraph g(h, labels);
  const std::vector<std::string> comments = {"a comment", "another"};
  const std::string text = to_t4g(g, comments);
  CHECK(text.rfind("# a comment\n", 0) == 0);
  CHECK(parse_t4g(text) == g);
  CHECK(graph_from_json(to_json(g)) == g);

  const auto dir = std::filesystem::temp_directory_path();
  const auto t4g_path = dir / "turan4_unit_roundtrip.t4g";
  const auto json_path = dir / "turan4_unit_roundtrip.json";
  std::ofstream(t4g_path) << text;
  std::ofstream(json_path) << to_json(g).dump();
  CHECK(read_graph_file(t4g_path) == g);
  CHECK(read_graph_file(json_path) == g);
  std::filesystem::remove(t4g_path);
  std::filesystem::remove(json_path);
}

TEST_CASE("t4g parse errors") {
  CHECK_THROWS_AS(parse_t4g(""), Error);
  CHECK_THROWS_AS(parse_t4g("n 4\ne 1\n0 1 2\n"), Error);
  CHECK_THROWS_AS(parse_t4g("n 4\ne 2\n0 1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_t4g("n 4\ne 1\n0 1 2 7\n"), Error);
  CHECK_THROWS_AS(parse_t4g("e 1\nn 4\n0 1 2 3\n"), Error);
  CHECK_NOTHROW(parse_t4g("# header\n\nn 4\ne 1\n0 1 2 3\n"));
}

#pragma once

#include <algorithm>
#include <vector>

#include "turan4/four_graph.hpp"
#include "turan4/rng.hpp"

namespace turan4::test {

inline FourGraph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d)
          if (uniform_open01(rng) < p) edges.push_back({a, b, c, d});
  return FourGraph::from_edges(n, edges);
}

inline std::vector<Vertex> iota(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  return v;
}

}  // namespace turan4::test

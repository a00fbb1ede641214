#pragma once

#include <string>
#include <vector>

#include "turan4/constructions.hpp"
#include "turan4/error.hpp"

namespace turan4::detail {

/// Collects edges family by family and checks, at the end, that the
/// families were pairwise disjoint and free of repeats.
class FamilyCollector {
public:
  void begin(std::string name) {
    census_.add(std::move(name), 0);
  }
  void add(Vertex a, Vertex b, Vertex c, Vertex d) {
    edges_.push_back({a, b, c, d});
    ++current_;
  }
  void end() {
    census_.families.back().second = BigInt(std::to_string(current_));
    current_ = 0;
  }

  Construction finish(std::size_t n, std::vector<Label> labels, const std::string& what) && {
    FourGraph g = FourGraph::from_edges(n, edges_);
    if (g.edge_count() != edges_.size())
      throw Error(ErrorCode::InvariantViolated,
                  what + ": families overlap (" + std::to_string(edges_.size()) + " generated, " +
                      std::to_string(g.edge_count()) + " distinct)");
    return Construction{LabeledFourGraph(std::move(g), std::move(labels)), std::move(census_)};
  }

private:
  std::vector<Edge> edges_;
  Census census_;
  unsigned long long current_ = 0;
};

inline BigInt big(unsigned long long v) { return BigInt(std::to_string(v)); }

}  // namespace turan4::detail

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turan4/bitset.hpp"
#include "turan4/kernels.hpp"

namespace turan4 {

using Vertex = std::uint32_t;
using Edge = std::array<Vertex, 4>;

/// 4-uniform hypergraph on vertices [0, n). Edges are sorted 4-tuples kept
/// in lexicographic order without duplicates.
class FourGraph {
public:
  FourGraph() = default;
  explicit FourGraph(std::size_t n) : n_(n) {}

  /// Validates, sorts and deduplicates. Throws IndexOutOfRange / EdgeArityNot4.
  static FourGraph from_edges(std::size_t n, std::span<const Edge> edges);
  static FourGraph from_edges(std::size_t n, const std::vector<std::vector<Vertex>>& subsets);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(Edge e) const;

  friend bool operator==(const FourGraph&, const FourGraph&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// A vertex subset given as explicit indices; validated against n.
VertexBits to_bits(std::size_t n, std::span<const Vertex> subset);

struct InducedGraph {
  FourGraph graph;
  /// old index -> new index, nullopt for vertices outside the subset.
  std::vector<std::optional<Vertex>> index_map;
};

/// Subgraph induced by `subset`, vertices renumbered in increasing order.
InducedGraph induced(const FourGraph& h, std::span<const Vertex> subset);
/// Subgraph induced by the complement of `subset`.
InducedGraph remove(const FourGraph& h, std::span<const Vertex> subset);
FourGraph disjoint_union(std::span<const FourGraph> parts);

/// Number of edges with at least one vertex in `subset`.
std::size_t edges_meeting(const FourGraph& h, std::span<const Vertex> subset);

/// Structured vertex name carried from a construction, e.g. (i, x, y, z).
using Label = std::vector<int>;

class LabeledFourGraph {
public:
  LabeledFourGraph() = default;
  /// Labels may be empty; otherwise one per vertex, uniform arity, distinct.
  LabeledFourGraph(FourGraph graph, std::vector<Label> labels);

  const FourGraph& graph() const { return graph_; }
  const std::vector<Label>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }

  /// Index of the vertex carrying `label`, if any.
  std::optional<Vertex> find(const Label& label) const;

  friend bool operator==(const LabeledFourGraph&, const LabeledFourGraph&) = default;

private:
  FourGraph graph_;
  std::vector<Label> labels_;
};

LabeledFourGraph induced(const LabeledFourGraph& h, std::span<const Vertex> subset);
LabeledFourGraph remove(const LabeledFourGraph& h, std::span<const Vertex> subset);

/// Per-vertex lists of incident edge indices (CSR layout).
class Incidence {
public:
  explicit Incidence(const FourGraph& h);

  std::span<const std::uint32_t> of(Vertex v) const {
    return {edge_ids_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> edge_ids_;
};

/// Edges as SoA bitmasks for the scan kernels.
class EdgeMasks {
public:
  EdgeMasks() = default;
  explicit EdgeMasks(const FourGraph& h);

  kernels::EdgeMaskView view() const { return {data_, edges_, words_}; }
  std::size_t edge_count() const { return edges_; }
  std::size_t word_count() const { return words_; }

private:
  std::vector<std::uint64_t> data_;
  std::size_t edges_ = 0;
  std::size_t words_ = 0;
};

}  // namespace turan4

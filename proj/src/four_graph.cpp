#include "turan4/four_graph.hpp"

#include <algorithm>
#include <set>

#include "turan4/error.hpp"

namespace turan4 {
namespace {

Edge canonical_edge(std::size_t n, Edge e) {
  for (Vertex v : e)
    if (v >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n) + ")");
  std::sort(e.begin(), e.end());
  if (e[0] == e[1] || e[1] == e[2] || e[2] == e[3])
    throw Error(ErrorCode::EdgeArityNot4, "edge has a repeated vertex");
  return e;
}

}  // namespace

FourGraph FourGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  FourGraph g(n);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) g.edges_.push_back(canonical_edge(n, e));
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  return g;
}

FourGraph FourGraph::from_edges(std::size_t n, const std::vector<std::vector<Vertex>>& subsets) {
  std::vector<Edge> edges;
  edges.reserve(subsets.size());
  for (const auto& s : subsets) {
    if (s.size() != 4)
      throw Error(ErrorCode::EdgeArityNot4, "subset of size " + std::to_string(s.size()));
    edges.push_back({s[0], s[1], s[2], s[3]});
  }
  return from_edges(n, edges);
}

bool FourGraph::has_edge(Edge e) const {
  std::sort(e.begin(), e.end());
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

VertexBits to_bits(std::size_t n, std::span<const Vertex> subset) {
  VertexBits bits(n);
  for (Vertex v : subset) {
    if (v >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n) + ")");
    bits.set(v);
  }
  return bits;
}

namespace {

InducedGraph induced_by_bits(const FourGraph& h, const VertexBits& keep) {
  InducedGraph out;
  out.index_map.assign(h.vertex_count(), std::nullopt);
  Vertex next = 0;
  for (std::size_t v = 0; v < h.vertex_count(); ++v)
    if (keep.test(v)) out.index_map[v] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    if (keep.test(e[0]) && keep.test(e[1]) && keep.test(e[2]) && keep.test(e[3]))
      edges.push_back({*out.index_map[e[0]], *out.index_map[e[1]], *out.index_map[e[2]],
                       *out.index_map[e[3]]});
  }
  // Renumbering is monotone, so the edge list stays canonical.
  out.graph = FourGraph::from_edges(next, edges);
  return out;
}

}  // namespace

InducedGraph induced(const FourGraph& h, std::span<const Vertex> subset) {
  return induced_by_bits(h, to_bits(h.vertex_count(), subset));
}

InducedGraph remove(const FourGraph& h, std::span<const Vertex> subset) {
  VertexBits keep = to_bits(h.vertex_count(), subset);
  VertexBits all(h.vertex_count());
  all.set_all();
  all.subtract(keep);
  return induced_by_bits(h, all);
}

FourGraph disjoint_union(std::span<const FourGraph> parts) {
  std::size_t n = 0;
  std::vector<Edge> edges;
  for (const FourGraph& g : parts) {
    const auto offset = static_cast<Vertex>(n);
    for (const Edge& e : g.edges())
      edges.push_back({e[0] + offset, e[1] + offset, e[2] + offset, e[3] + offset});
    n += g.vertex_count();
  }
  return FourGraph::from_edges(n, edges);
}

std::size_t edges_meeting(const FourGraph& h, std::span<const Vertex> subset) {
  const VertexBits bits = to_bits(h.vertex_count(), subset);
  return static_cast<std::size_t>(std::count_if(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
    return bits.test(e[0]) || bits.test(e[1]) || bits.test(e[2]) || bits.test(e[3]);
  }));
}

LabeledFourGraph::LabeledFourGraph(FourGraph graph, std::vector<Label> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (labels_.empty()) return;
  if (labels_.size() != graph_.vertex_count())
    throw Error(ErrorCode::InvalidArgument, "label count does not match vertex count");
  const std::size_t arity = labels_.front().size();
  for (const Label& l : labels_)
    if (l.size() != arity) throw Error(ErrorCode::InvalidArgument, "label arity is not uniform");
  std::set<Label> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size())
    throw Error(ErrorCode::InvalidArgument, "labels are not pairwise distinct");
}

std::optional<Vertex> LabeledFourGraph::find(const Label& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

namespace {

LabeledFourGraph carry_labels(const LabeledFourGraph& h, InducedGraph sub) {
  std::vector<Label> labels;
  if (h.has_labels()) {
    labels.resize(sub.graph.vertex_count());
    for (std::size_t v = 0; v < sub.index_map.size(); ++v)
      if (sub.index_map[v]) labels[*sub.index_map[v]] = h.labels()[v];
  }
  return LabeledFourGraph(std::move(sub.graph), std::move(labels));
}

}  // namespace

LabeledFourGraph induced(const LabeledFourGraph& h, std::span<const Vertex> subset) {
  return carry_labels(h, induced(h.graph(), subset));
}

LabeledFourGraph remove(const LabeledFourGraph& h, std::span<const Vertex> subset) {
  return carry_labels(h, remove(h.graph(), subset));
}

Incidence::Incidence(const FourGraph& h) : offsets_(h.vertex_count() + 1, 0) {
  for (const Edge& e : h.edges())
    for (Vertex v : e) ++offsets_[v + 1];
  for (std::size_t v = 0; v < h.vertex_count(); ++v) offsets_[v + 1] += offsets_[v];
  edge_ids_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t j = 0; j < h.edge_count(); ++j)
    for (Vertex v : h.edges()[j]) edge_ids_[cursor[v]++] = static_cast<std::uint32_t>(j);
}

EdgeMasks::EdgeMasks(const FourGraph& h)
    : data_(((h.vertex_count() + 63) / 64) * h.edge_count(), 0),
      edges_(h.edge_count()),
      words_((h.vertex_count() + 63) / 64) {
  for (std::size_t j = 0; j < edges_; ++j)
    for (Vertex v : h.edges()[j]) data_[(v >> 6) * edges_ + j] |= std::uint64_t{1} << (v & 63);
}

}  // namespace turan4

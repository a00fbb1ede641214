#include <algorithm>
#include <map>

#include "common.hpp"

namespace turan4 {
namespace {

struct Split {
  std::vector<Vertex> first;            // V'
  std::vector<Vertex> second;           // V''
  std::vector<std::uint32_t> position;  // index of a vertex inside its side
  std::vector<std::uint8_t> in_first;
};

Split split_of(const CircularPart& part) {
  const std::size_t n = part.graph.vertex_count();
  Split s;
  s.position.assign(n, 0);
  s.in_first.assign(n, 0);
  for (Vertex v : part.first_side) {
    if (v >= n)
      throw Error(ErrorCode::PartitionMismatch,
                  "first side names vertex " + std::to_string(v) + " of a " + std::to_string(n) +
                      "-vertex part");
    if (s.in_first[v])
      throw Error(ErrorCode::PartitionMismatch, "first side repeats vertex " + std::to_string(v));
    s.in_first[v] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& side = s.in_first[v] ? s.first : s.second;
    s.position[v] = static_cast<std::uint32_t>(side.size());
    side.push_back(v);
  }
  return s;
}

std::vector<Split> splits_of(const CircularSpec& spec) {
  if (spec.parts.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "circular construction needs at least 2 parts");
  std::vector<Split> out;
  for (const auto& p : spec.parts) out.push_back(split_of(p));
  return out;
}

std::vector<Vertex> block_offsets(const std::vector<Split>& s) {
  const std::size_t m = s.size();
  std::vector<Vertex> offset(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    offset[i + 1] =
        offset[i] + static_cast<Vertex>(s[i].first.size() * s[(i + 1) % m].second.size());
  return offset;
}

}  // namespace

void validate_circular(const CircularSpec& spec) {
  const auto splits = splits_of(spec);
  std::map<std::pair<const CircularPart*, int>, std::size_t> seen;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const CircularPart& part = spec.parts[i];
    // Identical parts are solved once.
    const CircularPart* key = &part;
    for (std::size_t j = 0; j < i; ++j)
      if (spec.parts[j].graph == part.graph && spec.parts[j].first_side == part.first_side) {
        key = &spec.parts[j];
        break;
      }
    const auto whole = [&] {
      auto [it, fresh] = seen.try_emplace({key, 0}, 0);
      if (fresh) it->second = alpha_exact(part.graph, SolveBudget::unbounded()).alpha;
      return it->second;
    }();
    const auto first = [&] {
      auto [it, fresh] = seen.try_emplace({key, 1}, 0);
      if (fresh)
        it->second =
            alpha_exact(induced(part.graph, splits[i].first).graph, SolveBudget::unbounded()).alpha;
      return it->second;
    }();
    if (whole != part.alpha + 1)
      throw Error(ErrorCode::HypothesisViolated,
                  "part " + std::to_string(i) + ": alpha(G) = " + std::to_string(whole) +
                      ", expected " + std::to_string(part.alpha + 1));
    if (first > part.alpha)
      throw Error(ErrorCode::HypothesisViolated,
                  "part " + std::to_string(i) + ": alpha(G & V') = " + std::to_string(first) +
                      " exceeds " + std::to_string(part.alpha));
  }
}

std::vector<Vertex> circular_block(const CircularSpec& spec, std::size_t i) {
  const auto splits = splits_of(spec);
  if (i >= splits.size())
    throw Error(ErrorCode::IndexOutOfRange, "block " + std::to_string(i) + " of " +
                                                std::to_string(splits.size()));
  const auto offset = block_offsets(splits);
  std::vector<Vertex> out;
  for (Vertex v = offset[i]; v < offset[i + 1]; ++v) out.push_back(v);
  return out;
}

Construction circular_build(const CircularSpec& spec, bool validate) {
  if (validate) validate_circular(spec);
  const auto s = splits_of(spec);
  const std::size_t m = s.size();
  const auto offset = block_offsets(s);

  // Vertex (x, y) of W_i with x in V_i', y in V_{i+1}''.
  const auto w = [&](std::size_t i, std::uint32_t x_pos, std::uint32_t y_pos) {
    return offset[i] + x_pos * static_cast<Vertex>(s[(i + 1) % m].second.size()) + y_pos;
  };

  detail::FamilyCollector out;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m, k = (i + 2) % m;
    const Split& si = s[i];
    const Split& sj = s[j];
    const std::uint32_t far = static_cast<std::uint32_t>(s[k].second.size());

    out.begin("E1[" + std::to_string(i) + "]");
    for (std::uint32_t x = 0; x < si.first.size(); ++x)
      for (const Edge& e : spec.parts[j].graph.edges()) {
        std::vector<Vertex> fixed;
        std::vector<std::uint32_t> free;  // V_{i+1}' positions, each paired with a y in V_{i+2}''
        for (Vertex v : e) {
          if (sj.in_first[v])
            free.push_back(sj.position[v]);
          else
            fixed.push_back(w(i, x, sj.position[v]));
        }
        if (fixed.empty()) continue;
        std::uint64_t combos = 1;
        for (std::size_t t = 0; t < free.size(); ++t) combos *= far;
        for (std::uint64_t code = 0; code < combos; ++code) {
          Vertex q[4];
          std::size_t len = 0;
          for (Vertex v : fixed) q[len++] = v;
          std::uint64_t rest = code;
          for (std::uint32_t xp : free) {
            q[len++] = w(j, xp, static_cast<std::uint32_t>(rest % far));
            rest /= far;
          }
          out.add(q[0], q[1], q[2], q[3]);
        }
      }
    out.end();

    const std::uint32_t ny = static_cast<std::uint32_t>(sj.second.size());
    out.begin("E2[" + std::to_string(i) + "]");
    for (std::uint32_t x1 = 0; x1 < si.first.size(); ++x1)
      for (std::uint32_t x2 = x1 + 1; x2 < si.first.size(); ++x2)
        for (std::uint32_t a = 0; a < ny; ++a)
          for (std::uint32_t b = a + 1; b < ny; ++b)
            for (std::uint32_t c = 0; c < ny; ++c)
              for (std::uint32_t d = c + 1; d < ny; ++d)
                out.add(w(i, x1, a), w(i, x1, b), w(i, x2, c), w(i, x2, d));
    out.end();

    out.begin("E4[" + std::to_string(i) + "]");
    for (const Edge& e : spec.parts[i].graph.edges()) {
      if (!(si.in_first[e[0]] && si.in_first[e[1]] && si.in_first[e[2]] && si.in_first[e[3]]))
        continue;
      for (std::uint32_t a = 0; a < ny; ++a)
        for (std::uint32_t b = 0; b < ny; ++b)
          for (std::uint32_t c = 0; c < ny; ++c)
            for (std::uint32_t d = 0; d < ny; ++d)
              out.add(w(i, si.position[e[0]], a), w(i, si.position[e[1]], b),
                      w(i, si.position[e[2]], c), w(i, si.position[e[3]], d));
    }
    out.end();
  }

  std::vector<Label> labels;
  labels.reserve(offset[m]);
  for (std::size_t i = 0; i < m; ++i)
    for (Vertex x : s[i].first)
      for (Vertex y : s[(i + 1) % m].second)
        labels.push_back({static_cast<int>(i), static_cast<int>(x), static_cast<int>(y)});
  return std::move(out).finish(offset[m], std::move(labels), "circular");
}

Census circular_counts(const CircularSpec& spec) {
  const auto s = splits_of(spec);
  const std::size_t m = s.size();
  Census c;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m, k = (i + 2) % m;
    std::size_t by_first[5] = {0, 0, 0, 0, 0};
    for (const Edge& e : spec.parts[j].graph.edges()) {
      std::size_t t = 0;
      for (Vertex v : e) t += s[j].in_first[v];
      ++by_first[t];
    }
    BigInt e1 = 0;
    const BigInt far = detail::big(s[k].second.size());
    BigInt power = 1;
    for (int t = 0; t <= 3; ++t) {
      e1 += detail::big(by_first[t]) * power;
      power *= far;
    }
    e1 *= detail::big(s[i].first.size());

    const BigInt ny = detail::big(s[j].second.size());
    const BigInt e2 = binomial(detail::big(s[i].first.size()), 2) * binomial(ny, 2) * binomial(ny, 2);

    std::size_t inside = 0;
    for (const Edge& e : spec.parts[i].graph.edges())
      inside += s[i].in_first[e[0]] && s[i].in_first[e[1]] && s[i].in_first[e[2]] &&
                s[i].in_first[e[3]];
    const BigInt e4 = detail::big(inside) * ny * ny * ny * ny;

    c.add("E1[" + std::to_string(i) + "]", e1);
    c.add("E2[" + std::to_string(i) + "]", e2);
    c.add("E4[" + std::to_string(i) + "]", e4);
  }
  return c;
}

FourGraph zero_sum_cube() {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 8; ++a)
    for (Vertex b = a + 1; b < 8; ++b)
      for (Vertex c = b + 1; c < 8; ++c)
        for (Vertex d = c + 1; d < 8; ++d)
          if ((a ^ b ^ c ^ d) == 0) edges.push_back({a, b, c, d});
  return FourGraph::from_edges(8, edges);
}

CircularSpec zero_sum_circular_spec(std::size_t m) {
  CircularSpec spec;
  const FourGraph g = zero_sum_cube();
  for (std::size_t i = 0; i < m; ++i) spec.parts.push_back({g, {0, 1, 2, 3}, 3});
  return spec;
}

}  // namespace turan4

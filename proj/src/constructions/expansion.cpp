#include <algorithm>
#include <map>

#include "common.hpp"

namespace turan4 {
namespace {

std::size_t first_half(std::size_t part_size) { return (part_size + 1) / 2; }

// Parity of the number of members of {a, b, c} in the first half of a part.
unsigned triple_parity(std::size_t half, std::size_t a, std::size_t b, std::size_t c) {
  return static_cast<unsigned>((a < half) + (b < half) + (c < half)) & 1U;
}

void check_shape(const ExpansionSpec& spec) {
  const std::size_t n = spec.host.vertex_count();
  if (spec.crit0.size() != n || spec.crit1.size() != n || spec.d.size() != n ||
      spec.sizes.size() != n)
    throw Error(ErrorCode::InvalidArgument, "expansion spec: per-vertex arrays must have length " +
                                                std::to_string(n));
  for (std::size_t w = 0; w < n; ++w) {
    if (spec.sizes[w] == 0)
      throw Error(ErrorCode::InvalidArgument, "expansion spec: part size of vertex " +
                                                  std::to_string(w) + " is zero");
    if (spec.d[w] > 1)
      throw Error(ErrorCode::InvalidArgument, "expansion spec: d flag must be 0 or 1");
    for (const auto* set : {&spec.crit0[w], &spec.crit1[w]})
      for (Vertex x : *set) {
        if (x >= n)
          throw Error(ErrorCode::IndexOutOfRange,
                      "critical set of vertex " + std::to_string(w) + " names vertex " +
                          std::to_string(x));
        if (x == w)
          throw Error(ErrorCode::InvalidCriticalSet,
                      "critical set of vertex " + std::to_string(w) + " contains it");
      }
  }
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

BigInt parity_part_edges(std::size_t part_size) {
  const std::size_t p = first_half(part_size);
  const std::size_t q = part_size - p;
  const BigInt P = detail::big(p), Q = detail::big(q);
  return binomial(P, 4) + binomial(Q, 4) + binomial(P, 2) * binomial(Q, 2);
}

}  // namespace

ExpansionValidation validate_expansion(const ExpansionSpec& spec) {
  check_shape(spec);
  const FourGraph& h = spec.host;
  const std::size_t n = h.vertex_count();
  std::map<std::vector<Vertex>, std::size_t> cache;
  const auto alpha_without = [&](const std::vector<Vertex>& removed) {
    const auto key = sorted_unique(removed);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const AlphaResult r = alpha_exact(remove(h, key).graph, SolveBudget::unbounded());
    cache.emplace(key, r.alpha);
    return r.alpha;
  };

  ExpansionValidation out;
  out.host_alpha = alpha_without({});
  out.union_alpha.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    for (const auto* set : {&spec.crit0[w], &spec.crit1[w]})
      if (alpha_without(*set) >= out.host_alpha)
        throw Error(ErrorCode::InvalidCriticalSet,
                    "critical set of vertex " + std::to_string(w) +
                        " does not lower the independence number");
    std::vector<Vertex> both = spec.crit0[w];
    both.insert(both.end(), spec.crit1[w].begin(), spec.crit1[w].end());
    out.union_alpha[w] = alpha_without(both);
    if (spec.d[w] == 1 && out.union_alpha[w] + 2 > out.host_alpha)
      throw Error(ErrorCode::DFlagUnjustified,
                  "vertex " + std::to_string(w) + ": alpha(H - (I0 u I1)) = " +
                      std::to_string(out.union_alpha[w]) + " exceeds alpha(H) - 2");
  }
  return out;
}

Construction expansion_build(const ExpansionSpec& spec, bool validate) {
  if (validate)
    validate_expansion(spec);
  else
    check_shape(spec);
  const FourGraph& h = spec.host;
  const std::size_t n = h.vertex_count();

  std::vector<Vertex> offset(n + 1, 0);
  for (std::size_t w = 0; w < n; ++w) offset[w + 1] = offset[w] + static_cast<Vertex>(spec.sizes[w]);
  const std::size_t total = offset[n];

  detail::FamilyCollector out;
  out.begin("E1111");
  for (const Edge& e : h.edges())
    for (Vertex a = offset[e[0]]; a < offset[e[0] + 1]; ++a)
      for (Vertex b = offset[e[1]]; b < offset[e[1] + 1]; ++b)
        for (Vertex c = offset[e[2]]; c < offset[e[2] + 1]; ++c)
          for (Vertex d = offset[e[3]]; d < offset[e[3] + 1]; ++d) out.add(a, b, c, d);
  out.end();

  out.begin("E22");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (Vertex a = offset[x]; a < offset[x + 1]; ++a)
        for (Vertex b = a + 1; b < offset[x + 1]; ++b)
          for (Vertex c = offset[y]; c < offset[y + 1]; ++c)
            for (Vertex d = c + 1; d < offset[y + 1]; ++d) out.add(a, b, c, d);
  out.end();

  out.begin("E31");
  for (std::size_t w = 0; w < n; ++w) {
    const std::size_t size = spec.sizes[w];
    const std::size_t half = first_half(size);
    const std::vector<Vertex> targets[2] = {sorted_unique(spec.crit0[w]),
                                            sorted_unique(spec.crit1[w])};
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = a + 1; b < size; ++b)
        for (std::size_t c = b + 1; c < size; ++c) {
          const unsigned i = spec.d[w] ? triple_parity(half, a, b, c) : 0U;
          for (Vertex x : targets[i])
            for (Vertex d = offset[x]; d < offset[x + 1]; ++d)
              out.add(offset[w] + static_cast<Vertex>(a), offset[w] + static_cast<Vertex>(b),
                      offset[w] + static_cast<Vertex>(c), d);
        }
  }
  out.end();

  out.begin("Ew");
  for (std::size_t w = 0; w < n; ++w) {
    const std::size_t size = spec.sizes[w];
    const std::size_t half = first_half(size);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = a + 1; b < size; ++b)
        for (std::size_t c = b + 1; c < size; ++c)
          for (std::size_t d = c + 1; d < size; ++d) {
            const std::size_t inside = (a < half) + (b < half) + (c < half) + (d < half);
            if (spec.d[w] && inside % 2 != 0) continue;
            out.add(offset[w] + static_cast<Vertex>(a), offset[w] + static_cast<Vertex>(b),
                    offset[w] + static_cast<Vertex>(c), offset[w] + static_cast<Vertex>(d));
          }
  }
  out.end();

  std::vector<Label> labels;
  labels.reserve(total);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t j = 0; j < spec.sizes[w]; ++j)
      labels.push_back({static_cast<int>(w), static_cast<int>(j)});
  return std::move(out).finish(total, std::move(labels), "expansion");
}

Census expansion_counts(const ExpansionSpec& spec) {
  check_shape(spec);
  const FourGraph& h = spec.host;
  const std::size_t n = h.vertex_count();
  std::vector<BigInt> N(n);
  for (std::size_t w = 0; w < n; ++w) N[w] = detail::big(spec.sizes[w]);

  BigInt e1111 = 0;
  for (const Edge& e : h.edges()) e1111 += N[e[0]] * N[e[1]] * N[e[2]] * N[e[3]];

  BigInt e22 = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) e22 += binomial(N[x], 2) * binomial(N[y], 2);

  BigInt e31 = 0, internal = 0;
  for (std::size_t w = 0; w < n; ++w) {
    BigInt mass[2] = {0, 0};
    for (int i = 0; i < 2; ++i)
      for (Vertex x : sorted_unique(i == 0 ? spec.crit0[w] : spec.crit1[w])) mass[i] += N[x];
    if (spec.d[w]) {
      const BigInt p = detail::big(first_half(spec.sizes[w]));
      const BigInt q = N[w] - p;
      // Triples with an even number of members in the first half.
      const BigInt even = binomial(q, 3) + binomial(p, 2) * q;
      const BigInt odd = binomial(N[w], 3) - even;
      e31 += even * mass[0] + odd * mass[1];
      internal += parity_part_edges(spec.sizes[w]);
    } else {
      e31 += binomial(N[w], 3) * mass[0];
      internal += binomial(N[w], 4);
    }
  }

  Census c;
  c.add("E1111", e1111);
  c.add("E22", e22);
  c.add("E31", e31);
  c.add("Ew", internal);
  return c;
}

FourGraph example1_host() {
  static const std::vector<std::vector<Vertex>> one_based = {
      {1, 2, 3, 4}, {5, 6, 7, 8}, {1, 2, 5, 6}, {3, 4, 7, 8}, {1, 2, 7, 8},
      {3, 4, 5, 6}, {1, 3, 5, 7}, {2, 4, 6, 8}, {1, 3, 6, 8}, {2, 4, 5, 7},
      {1, 4, 5, 8}, {2, 3, 6, 7}, {1, 4, 6, 7}, {2, 3, 5, 8}};
  std::vector<std::vector<Vertex>> edges = one_based;
  for (auto& e : edges)
    for (auto& v : e) --v;
  return FourGraph::from_edges(8, edges);
}

ExpansionSpec example1_expansion(std::size_t part_size) {
  ExpansionSpec spec;
  spec.host = example1_host();
  const std::size_t n = spec.host.vertex_count();
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<std::vector<Vertex>> avoiding;
    for (const Edge& e : spec.host.edges())
      if (std::find(e.begin(), e.end(), static_cast<Vertex>(w)) == e.end())
        avoiding.emplace_back(e.begin(), e.end());
    spec.crit0.push_back(avoiding.at(0));
    spec.crit1.push_back(avoiding.at(1));
  }
  spec.d.assign(n, 1);
  spec.sizes.assign(n, part_size);
  return spec;
}

ExpansionSpec example2_expansion(std::size_t part_size) {
  ExpansionSpec spec;
  spec.host = example1_host();
  const std::vector<Vertex> s5678 = {4, 5, 6, 7}, s3478 = {2, 3, 6, 7}, s1278 = {0, 1, 6, 7};
  spec.crit0 = {s5678, s5678, s5678, s5678, s3478, s3478, {1, 3, 5, 7}, {1, 2, 5, 6}};
  spec.crit1 = {s3478, s3478, s1278, s1278, s1278, s1278, {0, 2, 5, 7}, {0, 3, 5, 6}};
  spec.d.assign(8, 1);
  spec.sizes.assign(8, part_size);
  return spec;
}

}  // namespace turan4

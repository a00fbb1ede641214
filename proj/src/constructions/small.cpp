#include <algorithm>
#include <mutex>

#include "common.hpp"

namespace turan4 {
namespace {

// Edge {a, b} of K5 (a < b) in lexicographic order.
int k5_edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  static constexpr int offset[] = {0, 4, 7, 9};
  return offset[a] + (b - a - 1);
}

// Round-robin 1-factorisation of K6 on {0..4, 5}: colour c holds {5, c}
// and {c-j, c+j} mod 5 for j = 1, 2.
int k6_colour(int u, int v) {
  if (u == 5) return v;
  if (v == 5) return u;
  // u + v ≡ 2c (mod 5), and 2 is invertible with inverse 3.
  return ((u + v) * 3) % 5;
}

std::vector<std::array<std::pair<int, int>, 3>> k6_perfect_matchings() {
  std::vector<std::array<std::pair<int, int>, 3>> out;
  for (int b = 1; b < 6; ++b) {
    std::vector<int> rest;
    for (int v = 1; v < 6; ++v)
      if (v != b) rest.push_back(v);
    for (int j = 1; j < 4; ++j) {
      std::vector<int> last;
      for (int t = 1; t < 4; ++t)
        if (t != j) last.push_back(rest[t]);
      out.push_back({std::pair{0, b}, std::pair{rest[0], rest[j]}, std::pair{last[0], last[1]}});
    }
  }
  return out;
}

Construction build_two_k6(const TwoK6Variant& variant) {
  detail::FamilyCollector out;
  out.begin("cross");
  for (int colour = 0; colour < 5; ++colour)
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        if (k6_colour(a, b) != colour) continue;
        for (int c = 0; c < 6; ++c)
          for (int d = c + 1; d < 6; ++d)
            if (k6_colour(c, d) == colour)
              out.add(static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(6 + c),
                      static_cast<Vertex>(6 + d));
      }
  out.end();
  auto add_system = [&](const std::array<std::pair<int, int>, 3>& matching, int offset) {
    for (const auto& [u, v] : matching) {
      std::vector<Vertex> q;
      for (int t = 0; t < 6; ++t)
        if (t != u && t != v) q.push_back(static_cast<Vertex>(offset + t));
      out.add(q[0], q[1], q[2], q[3]);
    }
  };
  out.begin("quadsA");
  add_system(variant.matching_a, 0);
  out.end();
  out.begin("quadsB");
  add_system(variant.matching_b, 6);
  out.end();

  std::vector<Label> labels;
  for (int copy = 0; copy < 2; ++copy)
    for (int v = 0; v < 6; ++v) labels.push_back({copy, v});
  return std::move(out).finish(12, std::move(labels), "two_k6");
}

}  // namespace

Construction k5_line_construction() {
  detail::FamilyCollector out;
  const auto e = [](int a, int b) { return static_cast<Vertex>(k5_edge_index(a, b)); };
  out.begin("stars");
  for (int v = 0; v < 5; ++v) {
    std::vector<Vertex> star;
    for (int u = 0; u < 5; ++u)
      if (u != v) star.push_back(e(u, v));
    out.add(star[0], star[1], star[2], star[3]);
  }
  out.end();
  out.begin("four_cycles");
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c)
        for (int d = c + 1; d < 5; ++d) {
          out.add(e(a, b), e(b, c), e(c, d), e(d, a));
          out.add(e(a, b), e(b, d), e(d, c), e(c, a));
          out.add(e(a, c), e(c, b), e(b, d), e(d, a));
        }
  out.end();

  std::vector<Label> labels;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) labels.push_back({a, b});
  return std::move(out).finish(10, std::move(labels), "k5_line");
}

FourGraph two_k6_cross_edges() {
  const Construction c = build_two_k6(two_k6_variants().front());
  std::vector<Edge> cross(c.graph.graph().edges().begin(), c.graph.graph().edges().end());
  std::erase_if(cross, [](const Edge& e) { return e[1] >= 6 || e[2] < 6; });
  return FourGraph::from_edges(12, cross);
}

const std::vector<TwoK6Variant>& two_k6_variants() {
  static const std::vector<TwoK6Variant> variants = [] {
    std::vector<TwoK6Variant> found;
    const auto matchings = k6_perfect_matchings();
    for (const auto& a : matchings)
      for (const auto& b : matchings) {
        const TwoK6Variant v{a, b};
        const Construction c = build_two_k6(v);
        if (alpha_exact(c.graph.graph(), SolveBudget::unbounded()).alpha == 5) found.push_back(v);
      }
    return found;
  }();
  return variants;
}

Construction two_k6_construction(std::size_t variant) {
  const auto& variants = two_k6_variants();
  if (variant >= variants.size())
    throw Error(ErrorCode::VariantOutOfRange,
                "variant " + std::to_string(variant) + " of " + std::to_string(variants.size()));
  return build_two_k6(variants[variant]);
}

Construction z2cube_construction() {
  // Vertex (side, x, a) has index side * 8 + x * 2 + a.
  const auto idx = [](int side, int x, int a) { return static_cast<Vertex>(side * 8 + x * 2 + a); };
  const auto x_of = [](int v) { return (v % 8) / 2; };
  const auto a_of = [](int v) { return v % 2; };

  detail::FamilyCollector out;
  out.begin("rule_i");
  for (int p = 0; p < 8; ++p)
    for (int q = p + 1; q < 8; ++q)
      for (int r = q + 1; r < 8; ++r)
        for (int s = r + 1; s < 8; ++s)
          if ((x_of(p) ^ x_of(q) ^ x_of(r) ^ x_of(s)) == 0)
            out.add(idx(0, x_of(p), a_of(p)), idx(0, x_of(q), a_of(q)), idx(0, x_of(r), a_of(r)),
                    idx(0, x_of(s), a_of(s)));
  out.end();
  out.begin("rule_ii");
  for (int p = 8; p < 16; ++p)
    for (int q = p + 1; q < 16; ++q)
      for (int r = q + 1; r < 16; ++r)
        for (int s = r + 1; s < 16; ++s)
          if (((a_of(p) + a_of(q) + a_of(r) + a_of(s)) & 1) == 0)
            out.add(static_cast<Vertex>(p), static_cast<Vertex>(q), static_cast<Vertex>(r),
                    static_cast<Vertex>(s));
  out.end();
  for (int rule = 3; rule <= 4; ++rule) {
    out.begin(rule == 3 ? "rule_iii" : "rule_iv");
    for (int p = 0; p < 8; ++p)
      for (int q = p + 1; q < 8; ++q)
        for (int r = 8; r < 16; ++r)
          for (int s = r + 1; s < 16; ++s) {
            const bool hit = rule == 3
                                 ? x_of(p) == x_of(q) && a_of(r) != a_of(s)
                                 : a_of(r) == a_of(s) && (x_of(p) ^ x_of(q) ^ x_of(r) ^ x_of(s)) == 0;
            if (hit)
              out.add(static_cast<Vertex>(p), static_cast<Vertex>(q), static_cast<Vertex>(r),
                      static_cast<Vertex>(s));
          }
    out.end();
  }

  std::vector<Label> labels;
  for (int side = 0; side < 2; ++side)
    for (int x = 0; x < 4; ++x)
      for (int a = 0; a < 2; ++a) labels.push_back({side, x, a});
  return std::move(out).finish(16, std::move(labels), "z2cube");
}

Construction fano_complement() {
  detail::FamilyCollector out;
  out.begin("line_complements");
  for (int t = 0; t < 7; ++t) {
    const int line[] = {t, (t + 1) % 7, (t + 3) % 7};
    std::vector<Vertex> q;
    for (int v = 0; v < 7; ++v)
      if (std::find(std::begin(line), std::end(line), v) == std::end(line))
        q.push_back(static_cast<Vertex>(v));
    out.add(q[0], q[1], q[2], q[3]);
  }
  out.end();
  std::vector<Label> labels;
  for (int v = 0; v < 7; ++v) labels.push_back({v});
  return std::move(out).finish(7, std::move(labels), "fano_complement");
}

}  // namespace turan4

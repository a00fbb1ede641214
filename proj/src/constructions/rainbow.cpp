#include "common.hpp"

namespace turan4 {
namespace {

struct Cube {
  unsigned k;
  unsigned digit(std::uint32_t code, unsigned pos) const {  // pos in [1, k]
    return (code >> (2 * (k - pos))) & 3U;
  }
  unsigned first_disagreement(std::uint32_t a, std::uint32_t b) const {
    for (unsigned pos = 1; pos <= k; ++pos)
      if (digit(a, pos) != digit(b, pos)) return pos;
    return 0;
  }
  unsigned colour(std::uint32_t a, std::uint32_t b) const {
    const unsigned pos = first_disagreement(a, b);
    return digit(a, pos) ^ digit(b, pos);
  }
  bool in_x(std::uint32_t a) const { return digit(a, 1) < 2; }
};

}  // namespace

RainbowCounts rainbow_counts(unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "rainbow depth must be at least 1");
  const BigInt size = BigInt(1) << (2 * k);
  const BigInt half = size / 2;
  // R_1 = 4 (every triple of Z2^2 is rainbow); R_k = 4 * 64^(k-1) + 4 R_(k-1):
  // either the three vectors already differ pairwise in the first coordinate
  // (4 choices of the missing value, any tails), or they share it.
  BigInt rainbow = 4;
  BigInt tails = 1;
  for (unsigned j = 2; j <= k; ++j) {
    tails *= 64;
    rainbow = 4 * tails + 4 * rainbow;
  }
  RainbowCounts c;
  c.rainbow_triples = rainbow;
  c.e0 = 2 * binomial(half, 4) + binomial(half, 2) * binomial(half, 2);
  c.e1 = 2 * (binomial(size, 3) - rainbow);
  c.e2 = size * (size - 1);
  c.e4 = 1;
  return c;
}

Construction rainbow_build(unsigned k, RainbowPairRule rule) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "rainbow depth must be at least 1");
  if (k > kRainbowMaxBuildDepth)
    throw Error(ErrorCode::DepthTooLargeToMaterialize,
                "depth " + std::to_string(k) + " exceeds " + std::to_string(kRainbowMaxBuildDepth) +
                    "; use counts");
  const Cube cube{k};
  const std::uint32_t size = 1U << (2 * k);
  const auto vv = [](std::uint32_t code) { return static_cast<Vertex>(4 + code); };

  detail::FamilyCollector out;
  out.begin("E0");
  for (std::uint32_t a = 0; a < size; ++a)
    for (std::uint32_t b = a + 1; b < size; ++b)
      for (std::uint32_t c = b + 1; c < size; ++c)
        for (std::uint32_t d = c + 1; d < size; ++d)
          if ((cube.in_x(a) + cube.in_x(b) + cube.in_x(c) + cube.in_x(d)) % 2 == 0)
            out.add(vv(a), vv(b), vv(c), vv(d));
  out.end();

  out.begin("E1");
  for (std::uint32_t a = 0; a < size; ++a)
    for (std::uint32_t b = a + 1; b < size; ++b)
      for (std::uint32_t c = b + 1; c < size; ++c) {
        const unsigned ab = cube.first_disagreement(a, b);
        const unsigned ac = cube.first_disagreement(a, c);
        const unsigned bc = cube.first_disagreement(b, c);
        if (ab == ac && ac == bc) continue;
        std::uint32_t apex, y, z;
        if (ab == ac) {
          apex = a, y = b, z = c;
        } else if (ab == bc) {
          apex = b, y = a, z = c;
        } else {
          apex = c, y = a, z = b;
        }
        const unsigned y1 = cube.digit(y, 1);
        const unsigned x1 = cube.digit(apex, 1);
        const unsigned partner = y1 ^ cube.colour(y, z);
        const bool same_side = (x1 >> 1) == (y1 >> 1);
        const bool take_pair = rule == RainbowPairRule::Covering ? !same_side : same_side;
        for (unsigned w = 0; w < 4; ++w) {
          const bool in_pair = w == y1 || w == partner;
          if (in_pair == take_pair) out.add(vv(a), vv(b), vv(c), static_cast<Vertex>(w));
        }
      }
  out.end();

  out.begin("E2");
  for (std::uint32_t a = 0; a < size; ++a)
    for (std::uint32_t b = a + 1; b < size; ++b) {
      const unsigned col = cube.colour(a, b);
      for (unsigned u = 0; u < 4; ++u)
        if (u < (u ^ col)) out.add(static_cast<Vertex>(u), static_cast<Vertex>(u ^ col), vv(a), vv(b));
    }
  out.end();

  out.begin("E4");
  out.add(0, 1, 2, 3);
  out.end();

  std::vector<Label> labels;
  for (int a = 0; a < 4; ++a) labels.push_back({0, a});
  for (std::uint32_t c = 0; c < size; ++c) labels.push_back({1, static_cast<int>(c)});
  return std::move(out).finish(4 + size, std::move(labels), "rainbow");
}

CircularSpec rainbow_circular_spec(unsigned k, std::size_t m) {
  const Construction h = rainbow_build(k);
  CircularSpec spec;
  for (std::size_t i = 0; i < m; ++i) spec.parts.push_back({h.graph.graph(), {0, 1, 2, 3}, 3});
  return spec;
}

}  // namespace turan4

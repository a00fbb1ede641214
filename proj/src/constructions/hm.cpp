#include <algorithm>
#include <limits>
#include <numeric>

#include "common.hpp"
#include "turan4/rng.hpp"

namespace turan4 {
namespace {

struct HmIndex {
  std::size_t m;
  unsigned lambda;
  Vertex operator()(std::size_t i, unsigned x, unsigned y, unsigned zi) const {
    return static_cast<Vertex>((((i % m) * 4 + x) * 4 + y) * lambda + zi);
  }
};

}  // namespace

HmSpec HmSpec::first_lambda(std::size_t m, unsigned lambda) {
  HmSpec s;
  s.m = m;
  s.b_set.clear();
  for (unsigned z = 0; z < lambda; ++z) s.b_set.push_back(static_cast<int>(z));
  return s;
}

void validate_hm(const HmSpec& spec) {
  if (spec.m < 4)
    throw Error(ErrorCode::MTooSmall, "m = " + std::to_string(spec.m) + " (need m >= 4)");
  if (spec.b_set.empty() || spec.b_set.size() > 4)
    throw Error(ErrorCode::LambdaOutOfRange,
                "lambda = " + std::to_string(spec.b_set.size()) + " (need 1..4)");
  for (std::size_t a = 0; a < spec.b_set.size(); ++a) {
    if (spec.b_set[a] < 0 || spec.b_set[a] > 3)
      throw Error(ErrorCode::LambdaOutOfRange, "B element " + std::to_string(spec.b_set[a]) +
                                                   " is not in Z2^2");
    for (std::size_t b = 0; b < a; ++b)
      if (spec.b_set[a] == spec.b_set[b])
        throw Error(ErrorCode::LambdaOutOfRange, "B repeats " + std::to_string(spec.b_set[a]));
  }
}

Construction hm_build(const HmSpec& spec) {
  validate_hm(spec);
  const std::size_t m = spec.m;
  const unsigned lam = spec.lambda();
  const HmIndex v{m, lam};
  const auto& B = spec.b_set;

  detail::FamilyCollector out;

  out.begin("type1");
  if (lam == 4)
    for (std::size_t i = 0; i < m; ++i)
      for (unsigned x = 0; x < 4; ++x)
        for (unsigned y = 0; y < 4; ++y) out.add(v(i, x, y, 0), v(i, x, y, 1), v(i, x, y, 2), v(i, x, y, 3));
  out.end();

  out.begin("type2");
  for (std::size_t i = 0; i < m; ++i)
    for (unsigned c1 = 0; c1 < 16; ++c1)
      for (unsigned c2 = c1 + 1; c2 < 16; ++c2)
        for (unsigned c3 = c2 + 1; c3 < 16; ++c3)
          for (unsigned c4 = c3 + 1; c4 < 16; ++c4) {
            if (((c1 ^ c2 ^ c3 ^ c4) >> 2) != 0) continue;
            for (unsigned z1 = 0; z1 < lam; ++z1)
              for (unsigned z2 = 0; z2 < lam; ++z2)
                for (unsigned z3 = 0; z3 < lam; ++z3)
                  for (unsigned z4 = 0; z4 < lam; ++z4)
                    out.add(v(i, c1 >> 2, c1 & 3, z1), v(i, c2 >> 2, c2 & 3, z2),
                            v(i, c3 >> 2, c3 & 3, z3), v(i, c4 >> 2, c4 & 3, z4));
          }
  out.end();

  out.begin("type3");
  for (std::size_t i = 0; i < m; ++i)
    for (unsigned x1 = 0; x1 < 4; ++x1)
      for (unsigned ya = 0; ya < 4; ++ya)
        for (unsigned yb = ya + 1; yb < 4; ++yb)
          for (unsigned xa = 0; xa < 4; ++xa) {
            const unsigned xb = xa ^ ya ^ yb;
            if (xb <= xa) continue;
            for (unsigned y2a = 0; y2a < 4; ++y2a)
              for (unsigned y2b = 0; y2b < 4; ++y2b)
                for (unsigned z1 = 0; z1 < lam; ++z1)
                  for (unsigned z2 = 0; z2 < lam; ++z2)
                    for (unsigned z3 = 0; z3 < lam; ++z3)
                      for (unsigned z4 = 0; z4 < lam; ++z4)
                        out.add(v(i, x1, ya, z1), v(i, x1, yb, z2), v(i + 1, xa, y2a, z3),
                                v(i + 1, xb, y2b, z4));
          }
  out.end();

  out.begin("type4a");
  for (std::size_t i = 0; i < m; ++i)
    for (unsigned c1 = 0; c1 < 16; ++c1)
      for (unsigned c2 = c1 + 1; c2 < 16; ++c2)
        for (unsigned za = 0; za < lam; ++za)
          for (unsigned zb = za + 1; zb < lam; ++zb)
            for (unsigned zc = 0; zc < lam; ++zc)
              for (unsigned zd = zc + 1; zd < lam; ++zd)
                out.add(v(i, c1 >> 2, c1 & 3, za), v(i, c1 >> 2, c1 & 3, zb),
                        v(i, c2 >> 2, c2 & 3, zc), v(i, c2 >> 2, c2 & 3, zd));
  out.end();

  out.begin("type4b");
  for (std::size_t i = 0; i < m; ++i)
    for (unsigned c1 = 0; c1 < 16; ++c1)
      for (unsigned za = 0; za < lam; ++za)
        for (unsigned zb = za + 1; zb < lam; ++zb)
          for (unsigned x2 = 0; x2 < 4; ++x2)
            for (unsigned ya = 0; ya < 4; ++ya)
              for (unsigned yb = ya + 1; yb < 4; ++yb)
                for (unsigned zc = 0; zc < lam; ++zc)
                  for (unsigned zd = 0; zd < lam; ++zd)
                    out.add(v(i, c1 >> 2, c1 & 3, za), v(i, c1 >> 2, c1 & 3, zb),
                            v(i + 2, x2, ya, zc), v(i + 2, x2, yb, zd));
  out.end();

  out.begin("type4c");
  for (std::size_t i = 0; i < m; ++i)
    for (unsigned c1 = 0; c1 < 16; ++c1)
      for (unsigned za = 0; za < lam; ++za)
        for (unsigned zb = za + 1; zb < lam; ++zb) {
          const unsigned s = static_cast<unsigned>(B[za] ^ B[zb]);
          for (unsigned xa = 0; xa < 4; ++xa) {
            const unsigned xb = xa ^ s;
            if (xb <= xa) continue;
            for (unsigned ya = 0; ya < 4; ++ya)
              for (unsigned yb = 0; yb < 4; ++yb)
                for (unsigned zc = 0; zc < lam; ++zc)
                  for (unsigned zd = 0; zd < lam; ++zd)
                    out.add(v(i, c1 >> 2, c1 & 3, za), v(i, c1 >> 2, c1 & 3, zb),
                            v(i + 3, xa, ya, zc), v(i + 3, xb, yb, zd));
          }
        }
  out.end();

  std::vector<Label> labels;
  labels.reserve(16 * m * lam);
  for (std::size_t i = 0; i < m; ++i)
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (unsigned zi = 0; zi < lam; ++zi) labels.push_back({static_cast<int>(i), x, y, B[zi]});
  return std::move(out).finish(16 * m * lam, std::move(labels), "hm");
}

BigInt hm_edge_formula(std::size_t m, unsigned lambda) {
  if (m < 4) throw Error(ErrorCode::MTooSmall, "m = " + std::to_string(m) + " (need m >= 4)");
  if (lambda == 0 || lambda > 4)
    throw Error(ErrorCode::LambdaOutOfRange, "lambda = " + std::to_string(lambda) + " (need 1..4)");
  const BigInt l = lambda;
  const BigInt poly = 5168 * l * l * l * l - 1536 * l * l * l + 112 * l * l - 12 * l;
  const BigInt total = detail::big(m) * poly;
  if (total % 3 != 0)
    throw Error(ErrorCode::InvariantViolated, "edge polynomial not divisible by 3");
  return total / 3;
}

Census hm_type_formula(std::size_t m, unsigned lambda) {
  const BigInt M = detail::big(m);
  const BigInt l = lambda;
  const BigInt l2 = binomial(l, 2);
  Census c;
  c.add("type1", M * 16 * binomial(l, 4));
  c.add("type2", M * 476 * l * l * l * l);
  c.add("type3", M * 768 * l * l * l * l);
  c.add("type4a", M * 120 * l2 * l2);
  c.add("type4b", M * 384 * l2 * l * l);
  c.add("type4c", M * 512 * l2 * l * l);
  return c;
}

HmInequalitySlack hm_evaluate(const HmSpec& spec, std::span<const Vertex> independent_set) {
  validate_hm(spec);
  const std::size_t m = spec.m;
  const unsigned lam = spec.lambda();
  const std::size_t n = 16 * m * lam;
  // counts[i][x][y] = |A_3(i, x, y)|
  std::vector<std::array<std::array<int, 4>, 4>> counts(m);
  for (auto& level : counts)
    for (auto& row : level) row.fill(0);
  for (Vertex v : independent_set) {
    if (v >= n)
      throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " not in H_m");
    const std::size_t cell = v / lam;
    ++counts[cell / 16][(cell / 4) % 4][cell % 4];
  }

  std::vector<int> eps(m, 0), a1(m, 0), max_a2(m, 0), sum_a2(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (int x = 0; x < 4; ++x) {
      int a2 = 0;
      for (int y = 0; y < 4; ++y) {
        const int c = counts[i][x][y];
        eps[i] += std::max(0, c - 1);
        a2 += c > 0;
      }
      a1[i] += a2 > 0;
      max_a2[i] = std::max(max_a2[i], a2);
      sum_a2[i] += a2;
    }
  const auto chi = [&](std::size_t i) { return a1[i] > 0 ? 1 : 0; };

  HmInequalitySlack s;
  s.per_level = std::numeric_limits<long long>::max();
  long long lhs_sum = 0, chi_sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t i2 = (i + 2) % m, i3 = (i + 3) % m;
    const long long lhs = eps[i] + max_a2[i2] + a1[i3];
    const long long rhs = 2 + chi(i2) + chi(i3);
    s.per_level = std::min(s.per_level, rhs - lhs);
    lhs_sum += eps[i] + sum_a2[i];
    chi_sum += chi(i);
  }
  s.summed = 2 * static_cast<long long>(m) + chi_sum - lhs_sum;
  s.overall = 2 * static_cast<long long>(m) + chi_sum - static_cast<long long>(independent_set.size());
  return s;
}

HmInvariantReport hm_invariant_suite(const HmSpec& spec, std::size_t samples, std::uint64_t seed,
                                     bool throw_on_violation) {
  HmInvariantReport report;
  report.seed = seed;
  report.samples = samples;
  if (samples == 0) return report;
  const Construction h = hm_build(spec);
  const FourGraph& g = h.graph.graph();
  const Incidence incidence(g);
  constexpr long long kInf = std::numeric_limits<long long>::max();
  constexpr long long kNegInf = std::numeric_limits<long long>::min();
  report.min_slack = {kInf, kInf, kInf};
  report.max_slack = {kNegInf, kNegInf, kNegInf};

  std::vector<Vertex> order(g.vertex_count());
  for (std::size_t s = 0; s < samples; ++s) {
    std::iota(order.begin(), order.end(), Vertex{0});
    Rng rng(derive_seed(seed, "hm-invariant", s));
    shuffle(order, rng);
    const auto set = greedy_maximal_independent(g, incidence, order);
    const HmInequalitySlack slack = hm_evaluate(spec, set);
    report.max_set_size = std::max(report.max_set_size, set.size());
    report.min_slack.per_level = std::min(report.min_slack.per_level, slack.per_level);
    report.min_slack.summed = std::min(report.min_slack.summed, slack.summed);
    report.min_slack.overall = std::min(report.min_slack.overall, slack.overall);
    report.max_slack.per_level = std::max(report.max_slack.per_level, slack.per_level);
    report.max_slack.summed = std::max(report.max_slack.summed, slack.summed);
    report.max_slack.overall = std::max(report.max_slack.overall, slack.overall);
    if (slack.per_level < 0 || slack.summed < 0 || slack.overall < 0) ++report.violations;
  }
  if (throw_on_violation && report.violations > 0)
    throw Error(ErrorCode::InvariantViolated,
                std::to_string(report.violations) + " of " + std::to_string(samples) +
                    " sampled independent sets violate the level-set inequalities");
  return report;
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {"parity",    "k5line",   "twok6", "z2cube",
                                                 "fano",      "expansion", "circular", "rainbow",
                                                 "hm"};
  return names;
}

}  // namespace turan4

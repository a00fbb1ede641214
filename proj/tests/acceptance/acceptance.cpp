#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "turan4/alpha_solver.hpp"
#include "turan4/bounds.hpp"
#include "turan4/constructions.hpp"
#include "turan4/error.hpp"
#include "turan4/rng.hpp"
#include "turan4/simplex.hpp"

using namespace turan4;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double seconds_limit;
  std::function<void(Outcome&)> body;
};

FourGraph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d)
          if (uniform_open01(rng) < p) edges.push_back({a, b, c, d});
  return FourGraph::from_edges(n, edges);
}

void exact_rationals(Outcome& o) {
  const BoundRecord b = expansion_density_bound(8, 14, 4, 32, 8);
  o.require(b.t_value == Rational(1269, 8192), "t = " + b.t_value->to_string());
  o.require(b.t_star == Rational(52875, 65536), "t_* = " + b.t_star.to_string());
  o.detail = o.ok ? "t = 1269/8192, t_* = 52875/65536" : o.detail;
}

void circular_census(Outcome& o) {
  for (std::size_t m = 2; m <= 4; ++m) {
    const Construction c = circular_build(zero_sum_circular_spec(m));
    for (std::size_t i = 0; i < m; ++i) {
      const std::string s = "[" + std::to_string(i) + "]";
      o.require(c.census.get("E1" + s) == 772 && c.census.get("E2" + s) == 216 && c.census.get("E4" + s) == 256,
                "m=" + std::to_string(m) + " index " + std::to_string(i) + " census");
    }
    o.require(c.graph.edge_count() == 1244 * m, "m=" + std::to_string(m) + " e=" + std::to_string(c.graph.edge_count()));
  }
  if (o.ok) o.detail = "(772, 216, 256) per index, e = 1244m for m = 2, 3, 4";
}

void solver_certification(Outcome& o) {
  const Construction g2 = circular_build(zero_sum_circular_spec(2));
  o.require(g2.graph.vertex_count() == 32 && g2.graph.edge_count() == 2488, "G_2 shape");
  const auto t0 = std::chrono::steady_clock::now();
  const AlphaResult a = alpha_exact(g2.graph.graph(), SolveBudget::unbounded());
  const double g2_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(a.status == SolveStatus::Exact && a.alpha == 6, "alpha(G_2) = " + std::to_string(a.alpha));
  o.require(is_independent(g2.graph.graph(), a.witness) && a.witness.size() == 6, "G_2 witness");
  o.require(g2_seconds < 60.0, "G_2 solve took " + std::to_string(g2_seconds) + " s");

  const Construction h2 = rainbow_build(2);
  o.require(h2.graph.vertex_count() == 20, "H_2 shape");
  const auto t1 = std::chrono::steady_clock::now();
  const AlphaResult r = alpha_bruteforce(h2.graph.graph());
  const double h2_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
  o.require(r.alpha == 4, "alpha(H_2) = " + std::to_string(r.alpha));
  o.require(h2_seconds < 60.0, "H_2 scan took " + std::to_string(h2_seconds) + " s");
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "alpha(G_2) = 6 Exact, %llu nodes, %.2f s; alpha(H_2) = 4 exhaustive, %.2f s",
                  static_cast<unsigned long long>(a.nodes_explored), g2_seconds, h2_seconds);
    o.detail = buf;
  }
}

void rainbow_limit(Outcome& o) {
  const BoundRecord b = rainbow_limit_bound(2);
  o.require(b.t_value == Rational(443, 5120), "t = " + b.t_value->to_string());
  o.require(b.t_star == Rational(3987, 5120), "t_* = " + b.t_star.to_string());
  o.require(b.t_star < Rational::parse("0.778711"), "t_* not below 0.778711");
  const Rational target(443, 5120);
  std::string gaps;
  bool reached = false;
  for (unsigned k = 1; k <= 6; ++k) {
    const Rational rel = (rainbow_finite_bound(k, 2) - target) / target;
    const Rational mag = rel < Rational(0) ? -rel : rel;
    reached = mag < Rational(1, 1000);
    if (k >= 4) gaps += " k=" + std::to_string(k) + ":" + std::to_string(rel.to_double());
  }
  o.require(reached, "finite bound at k=6 not within 0.1%:" + gaps);
  if (o.ok) o.detail = "t = 443/5120, t_* = 3987/5120; relative gap" + gaps;
}

void hm_formula(Outcome& o) {
  std::size_t total = 0;
  for (std::size_t m = 4; m <= 5; ++m)
    for (unsigned lambda = 1; lambda <= 4; ++lambda) {
      const Construction c = hm_build(HmSpec::first_lambda(m, lambda));
      const std::string tag = "(" + std::to_string(m) + "," + std::to_string(lambda) + ")";
      o.require(c.graph.edge_count() == hm_edge_formula(m, lambda), tag + " e=" + std::to_string(c.graph.edge_count()));
      for (const auto& [name, count] : hm_type_formula(m, lambda).families)
        o.require(c.census.get(name) == count, tag + " " + name);
      total += c.graph.edge_count();
    }
  if (o.ok) o.detail = "8 instances, " + std::to_string(total) + " edges enumerated";
}

void headline(Outcome& o) {
  const BoundRecord top = corollary74_bound(21, 3);
  o.require(top.decimal() == "0.706335", "corollary74_bound(21,3) renders " + top.decimal());
  const std::vector<std::tuple<std::size_t, unsigned, unsigned, std::string>> rows = {
      {10, 2, 32, "0.711838"}, {11, 2, 35, "0.709199"}, {12, 2, 38, "0.707575"}, {13, 2, 41, "0.706727"},
      {14, 2, 44, "0.706485"}, {20, 3, 62, "0.706452"}, {21, 3, 65, "0.706335"}};
  for (const auto& [m, lambda, k, want] : rows) {
    const BoundRecord b = corollary74_bound(m, lambda);
    o.require(b.k == k && b.decimal() == want, "k=" + std::to_string(k) + " renders " + b.decimal());
  }
  if (o.ok) o.detail = "t_*(65,4) <= " + top.t_star.to_string() + " = " + top.decimal() + "; 7 rows match";
}

void small_ratios(Outcome& o) {
  o.require(section8_exact(6, 4) == 3, "T(6,5,4)");
  o.require(section8_exact(7, 4) == 7, "T(7,5,4)");
  std::size_t compared = 0, exceptional = 0;
  for (std::size_t alpha = 1; alpha <= 60; ++alpha)
    for (std::size_t n = 4; n <= 60; ++n) {
      if (2 * n < 3 * alpha || 4 * n > 7 * alpha) continue;
      const UnionBound u = union_upper(n, alpha);
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(alpha) + ")";
      if (4 * n == 7 * alpha - 2) {
        ++exceptional;
        const std::size_t m = (alpha - 2) / 4;
        o.require(u.value == static_cast<std::int64_t>(7 * m + 3), at + " union " + std::to_string(u.value));
        continue;
      }
      ++compared;
      const auto exact = section8_exact(n, alpha);
      o.require(exact && *exact == u.value, at + " union " + std::to_string(u.value));
    }
  if (o.ok)
    o.detail = std::to_string(compared) + " points equal, " + std::to_string(exceptional) + " exceptional points give 7m+3";
}

void optimizer(Outcome& o) {
  const ExpansionObjective obj = ExpansionObjective::from_spec(example2_expansion(1));
  MinimizeOptions opt;
  opt.restarts = 32;
  const OptimizerResult r = minimize(obj, opt);
  o.require(r.value_certified < Rational::parse("0.80262"), "certified " + r.value_certified.to_decimal(8, Rounding::Up));
  o.require(r.value_certified <= Rational(52875, 65536), "above the uniform point");
  const double g_opt = gradient_check(obj, r.x, 1e-6);
  const double g_uni = gradient_check(obj, std::vector<double>(8, 0.125), 1e-6);
  o.require(g_opt < 1e-4 && g_uni < 1e-4, "gradient check " + std::to_string(g_opt) + ", " + std::to_string(g_uni));
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "certified %s, gradient error %.2e", r.value_certified.to_decimal(6, Rounding::Up).c_str(),
                  g_opt);
    o.detail = buf;
  }
}

void small_constructions(Outcome& o) {
  auto certify = [&](const std::string& name, const Construction& c, std::size_t v, std::size_t e) {
    const AlphaResult a = alpha_exact(c.graph.graph(), SolveBudget::unbounded());
    o.require(c.graph.vertex_count() == v && c.graph.edge_count() == e, name + " shape");
    o.require(a.status == SolveStatus::Exact && a.alpha == 5 && is_independent(c.graph.graph(), a.witness),
              name + " alpha " + std::to_string(a.alpha));
  };
  certify("k5_line", k5_line_construction(), 10, 20);
  o.require(!two_k6_variants().empty(), "no two_k6 variant");
  if (!two_k6_variants().empty()) certify("two_k6", two_k6_construction(0), 12, 51);
  certify("z2cube", z2cube_construction(), 16, 220);
  if (o.ok) o.detail = "all alpha = 5 Exact; " + std::to_string(two_k6_variants().size()) + " two_k6 variants";
}

void property_suites(Outcome& o) {
  Rng rng(derive_seed(0, "acceptance-random-graphs"));
  std::size_t exact_solves = 0, ty_failures = 0, mismatches = 0;
  auto note_exact = [&](const FourGraph& h, const AlphaResult& a) {
    if (a.status != SolveStatus::Exact) return;
    ++exact_solves;
    if (!satisfies_thomasse_yeo(h, a.alpha)) ++ty_failures;
  };
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 4 + uniform_below(rng, 11);
    const FourGraph h = random_graph(n, 0.05 + 0.6 * uniform_open01(rng), rng);
    const AlphaResult fast = alpha_exact(h, SolveBudget::unbounded());
    const AlphaResult slow = alpha_bruteforce(h);
    if (fast.status != SolveStatus::Exact || fast.alpha != slow.alpha) ++mismatches;
    note_exact(h, fast);
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " solver mismatches");

  std::size_t parity_graphs = 0, parity_failures = 0;
  for (std::size_t n = 1; n <= 11; ++n)
    for (std::size_t m = 1; n + m <= 12; ++m)
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Construction c = parity_construction(ParitySpec::random(n, m, seed));
        const AlphaResult a = alpha_bruteforce(c.graph.graph());
        ++parity_graphs;
        if (a.alpha > 4) ++parity_failures;
        note_exact(c.graph.graph(), a);
      }
  o.require(parity_failures == 0, std::to_string(parity_failures) + " parity graphs with an independent 5-set");

  const HmInvariantReport hm = hm_invariant_suite(HmSpec::first_lambda(4, 1), 1000, 0);
  o.require(hm.samples == 1000 && hm.violations == 0, std::to_string(hm.violations) + " H_{4,1} violations");
  o.require(ty_failures == 0, std::to_string(ty_failures) + " transversal inequality failures");
  if (o.ok)
    o.detail = "200 solver instances, " + std::to_string(parity_graphs) + " parity graphs, 1000 H_{4,1} samples, " +
               std::to_string(exact_solves) + " exact solves";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact rationals", 1, exact_rationals},
      {2, "circular census", 5, circular_census},
      {3, "solver certification", 120, solver_certification},
      {4, "rainbow limit", 5, rainbow_limit},
      {5, "H_{m,lambda} formula equivalence", 120, hm_formula},
      {6, "headline bound", 1, headline},
      {7, "small-ratio formulas", 5, small_ratios},
      {8, "optimizer", 60, optimizer},
      {9, "small constructions", 30, small_constructions},
      {10, "property suites", 300, property_suites},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("threw: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (seconds > c.seconds_limit) o.require(false, "runtime over " + std::to_string(c.seconds_limit) + " s");
    if (!o.ok) ++failed;
    std::printf("%s %2d %-34s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

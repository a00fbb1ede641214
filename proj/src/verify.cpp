#include "turan4/verify.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "turan4/alpha_solver.hpp"
#include "turan4/bounds.hpp"
#include "turan4/constructions.hpp"
#include "turan4/error.hpp"
#include "turan4/rng.hpp"
#include "turan4/simplex.hpp"

namespace turan4 {
namespace {

class Recorder {
public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void expect(const std::string& name, bool ok, const std::string& detail = {}) {
    out_.push_back({suite_, name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
  }
  void info(const std::string& name, const std::string& detail) {
    out_.push_back({suite_, name, CheckStatus::Info, detail});
  }
  /// Runs `body`; an exception becomes a failed check.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(name, false, std::string("exception: ") + e.what());
    }
  }
  std::vector<Check> take() { return std::move(out_); }

private:
  std::string suite_;
  std::vector<Check> out_;
};

std::string str(const BigInt& v) { return turan4::to_string(v); }

AlphaResult certify(const FourGraph& g) { return alpha_exact(g, SolveBudget::unbounded()); }

void tables_suite(Recorder& r) {
  const ExternalConstants published = load_external_constants();
  r.expect("published table is monotone", published.table.monotonicity_violations().empty());

  TuranValueTable ours;
  const auto record = [&](const std::string& name, const FourGraph& g) {
    const AlphaResult a = certify(g);
    const TableEntry& e = density_from_graph(ours, g, a, name);
    const std::size_t n = g.vertex_count();
    const unsigned k = static_cast<unsigned>(a.alpha + 1);
    const TableEntry* p = published.table.find(n, k);
    const bool match = p && p->upper && e.upper && *p->upper == *e.upper;
    r.expect("T(" + std::to_string(n) + "," + std::to_string(k) + ",4) <= " +
                 std::to_string(g.edge_count()) + " via " + name,
             match,
             p && p->upper ? "published upper " + str(*p->upper) : "no published entry");
  };

  r.guarded("small constructions", [&] {
    const Construction fano = fano_complement();
    record("fano complement", fano.graph.graph());
    record("fano complement minus a vertex", remove(fano.graph.graph(), std::vector<Vertex>{0}).graph);
    const Construction k5 = k5_line_construction();
    record("K5 line graph", k5.graph.graph());
    record("K5 line graph minus a vertex", remove(k5.graph.graph(), std::vector<Vertex>{0}).graph);
    const Construction k6 = two_k6_construction(0);
    record("two K6", k6.graph.graph());
    record("two K6 minus a vertex", remove(k6.graph.graph(), std::vector<Vertex>{0}).graph);
    const Construction cube = z2cube_construction();
    const Vertex b0 = *cube.graph.find({1, 0, 0});
    const Vertex b1 = *cube.graph.find({1, 0, 1});
    record("Z2^2+Z2", cube.graph.graph());
    record("Z2^2+Z2 minus a B vertex", remove(cube.graph.graph(), std::vector<Vertex>{b0}).graph);
    record("Z2^2+Z2 minus (x,0),(x,1) in B",
           remove(cube.graph.graph(), std::vector<Vertex>{b0, b1}).graph);
  });

  r.guarded("lift T(18,5,4)", [&] {
    TuranValueTable t;
    t.add_lower(17, 5, 627, "Markstrom (2009)");
    const BigInt lifted = lift_lower(t, 18, 5);
    r.expect("T(18,5,4) >= 807 lifted from T(17,5,4) >= 627", lifted == 807, str(lifted));
    const BoundRecord d = density_lower_from_table(t, 18, 5);
    r.expect("t_*(5,4) >= 807 (8/3) / C(18,4) = 1076/1530", d.t_star == Rational(1076, 1530),
             d.t_star.to_string() + " = " + d.decimal() + "...");
  });

  r.guarded("circular half", [&] {
    const CircularSpec spec = zero_sum_circular_spec(2);
    const Construction g2 = circular_build(spec);
    const FourGraph half = induced(g2.graph.graph(), circular_block(spec, 0)).graph;
    const AlphaResult a = certify(half);
    r.info("W_0 of the circular zero-sum construction, m = 2",
           "v=" + std::to_string(half.vertex_count()) + ", e=" + std::to_string(half.edge_count()) +
               ", alpha=" + std::to_string(a.alpha) + " (published row: T(16,7,4) <= 108)");
  });
}

void formulas_suite(Recorder& r) {
  r.guarded("expansion bound", [&] {
    const BoundRecord b = expansion_density_bound(8, 14, 4, 32, 8);
    r.expect("t(6,4) <= 1269/8192 from the 8-vertex host", *b.t_value == Rational(1269, 8192),
             b.t_value->to_string());
    r.expect("t_*(6,4) <= 52875/65536", b.t_star == Rational(52875, 65536), b.t_star.to_string());
  });

  r.guarded("expansion census", [&] {
    for (std::size_t n = 2; n <= 6; ++n) {
      const ExpansionSpec spec = example1_expansion(n);
      const Construction c = expansion_build(spec, n == 2);
      const BigInt N = static_cast<long>(n);
      const BigInt h = (N + 1) / 2, l = N - h;
      const BigInt parity = binomial(h, 4) + binomial(l, 4) + binomial(h, 2) * binomial(l, 2);
      const BigInt formula = 14 * N * N * N * N + 28 * binomial(N, 2) * binomial(N, 2) +
                             32 * N * binomial(N, 3) + 8 * parity;
      r.expect("expansion of the 8-vertex host, N=" + std::to_string(n),
               formula == static_cast<long>(c.graph.edge_count()) &&
                   expansion_counts(spec).total() == formula,
               "e=" + std::to_string(c.graph.edge_count()) + ", formula " + str(formula));
    }
  });

  r.guarded("circular census", [&] {
    for (std::size_t m = 2; m <= 4; ++m) {
      const CircularSpec spec = zero_sum_circular_spec(m);
      const Construction c = circular_build(spec, m == 2);
      bool families = true;
      for (std::size_t i = 0; i < m; ++i) {
        const std::string s = "[" + std::to_string(i) + "]";
        families = families && c.census.get("E1" + s) == 772 && c.census.get("E2" + s) == 216 &&
                   c.census.get("E4" + s) == 256;
      }
      r.expect("e(G_m) = 1244m for m = " + std::to_string(m),
               families && c.graph.edge_count() == 1244 * m &&
                   circular_counts(spec).total() == static_cast<long>(1244 * m),
               "e=" + std::to_string(c.graph.edge_count()));
    }
  });

  r.guarded("circular expansion", [&] {
    r.expect("t_*(23,4) < 0.714739", circular_expansion_bound(7).decimal() == "0.714739",
             circular_expansion_bound(7).decimal());
    bool same = true;
    for (std::size_t m = 3; m <= 10; ++m)
      same = same && circular_expansion_bound(m).t_star ==
                         circular_expansion_bound_via_expansion(m).t_star;
    r.expect("circular expansion bound equals the generic expansion formula, m = 3..10", same);
  });

  r.guarded("rainbow", [&] {
    const BoundRecord b = rainbow_limit_bound(2);
    r.expect("t(7,4) <= 443/5120", *b.t_value == Rational(443, 5120), b.t_value->to_string());
    r.expect("t_*(7,4) <= 3987/5120 < 0.778711",
             b.t_star == Rational(3987, 5120) && b.t_star < Rational::parse("0.778711"),
             b.decimal());
    const Rational finite = rainbow_finite_bound(6, 2);
    const Rational rel = (finite - Rational(443, 5120)) / Rational(443, 5120);
    r.expect("e(H_6^2)/C(v,4) within 0.1% of 443/5120",
             rel < Rational(1, 1000) && rel > Rational(-1, 1000), std::to_string(rel.to_double()));
    for (unsigned k = 1; k <= 2; ++k) {
      const Construction h = rainbow_build(k);
      const RainbowCounts c = rainbow_counts(k);
      r.expect("rainbow H_" + std::to_string(k) + " census matches counts",
               h.census.get("E0") == c.e0 && h.census.get("E1") == c.e1 &&
                   h.census.get("E2") == c.e2 && h.census.get("E4") == c.e4);
      const AlphaResult a = alpha_bruteforce(h.graph.graph());
      r.expect("alpha(H_" + std::to_string(k) + ") = 4 by exhaustive search", a.alpha == 4,
               std::to_string(a.alpha));
    }
    const Construction h12 = circular_build(rainbow_circular_spec(1, 2));
    r.expect("e(H_1^2) materialised equals the bracket formula",
             rainbow_circular_edges(1, 2) == static_cast<long>(h12.graph.edge_count()),
             std::to_string(h12.graph.edge_count()));
  });

  r.guarded("H_m", [&] {
    for (std::size_t m = 4; m <= 5; ++m)
      for (unsigned lambda = 1; lambda <= 4; ++lambda) {
        const HmSpec spec = HmSpec::first_lambda(m, lambda);
        const Construction c = hm_build(spec);
        const Census types = hm_type_formula(m, lambda);
        bool per_type = true;
        for (const auto& [name, count] : types.families) per_type = per_type && c.census.get(name) == count;
        r.expect("H_{" + std::to_string(m) + "," + std::to_string(lambda) + "} edge count",
                 per_type && hm_edge_formula(m, lambda) == static_cast<long>(c.graph.edge_count()),
                 "e=" + std::to_string(c.graph.edge_count()));
      }
  });

  r.guarded("headline rows", [&] {
    const std::vector<std::tuple<std::size_t, unsigned, std::string>> rows = {
        {10, 2, "0.711838"}, {11, 2, "0.709199"}, {12, 2, "0.707575"}, {13, 2, "0.706727"},
        {14, 2, "0.706485"}, {20, 3, "0.706452"}, {21, 3, "0.706335"}};
    for (const auto& [m, lambda, want] : rows) {
      const BoundRecord b = corollary74_bound(m, lambda);
      r.expect("t_*(" + std::to_string(b.k) + ",4) <= " + want, b.decimal() == want, b.decimal());
    }
  });

  r.guarded("small ratios", [&] {
    r.expect("T(6,5,4) = 3", section8_exact(6, 4) == 3);
    r.expect("T(7,5,4) = 7", section8_exact(7, 4) == 7);
    std::size_t compared = 0, mismatched = 0, exceptional = 0;
    for (std::size_t alpha = 1; alpha <= 60; ++alpha)
      for (std::size_t n = 4; n <= 60; ++n) {
        if (2 * n < 3 * alpha || 4 * n > 7 * alpha) continue;
        const UnionBound u = union_upper(n, alpha);
        if (4 * n == 7 * alpha - 2) {
          ++exceptional;
          if (u.value != static_cast<std::int64_t>(n)) ++mismatched;
          continue;
        }
        ++compared;
        const auto exact = section8_exact(n, alpha);
        if (!exact || *exact != u.value || u.value < thomasse_yeo_edges(n, alpha)) ++mismatched;
      }
    r.expect("exact formula equals the union bound for 3/2 <= n/alpha <= 7/4, n <= 60",
             mismatched == 0,
             std::to_string(compared) + " points, " + std::to_string(exceptional) +
                 " exceptional points at 7m+3, " + std::to_string(mismatched) + " mismatches");
  });

  r.guarded("transversal bound", [&] {
    const BoundRecord b = thomasse_yeo_lower();
    r.expect("t_*(4) >= 64/343", b.t_star == Rational(64, 343), b.decimal());
  });

  r.guarded("optimizer", [&] {
    const ExpansionObjective obj = ExpansionObjective::from_spec(example2_expansion(1), 4);
    const OptimizerResult opt = minimize(obj);
    r.expect("optimised t_*(6,4) < 0.80262",
             opt.value_certified < Rational::parse("0.80262") &&
                 opt.value_certified <= Rational(52875, 65536),
             opt.value_certified.to_decimal(6, Rounding::Up));
  });
}

void invariants_suite(Recorder& r, const VerifyOptions& options) {
  r.guarded("H_m invariants", [&] {
    const HmInvariantReport rep = hm_invariant_suite(HmSpec::first_lambda(4, 1), options.samples,
                                                     derive_seed(options.seed, "verify-hm"));
    r.expect("H_{4,1}: " + std::to_string(rep.samples) + " sampled independent sets obey the level-set inequalities",
             rep.violations == 0 && rep.max_set_size <= 12,
             "largest sample " + std::to_string(rep.max_set_size));
  });

  r.guarded("solver equivalence", [&] {
    Rng rng(derive_seed(options.seed, "verify-solver"));
    std::size_t mismatches = 0, ty_failures = 0;
    for (std::size_t t = 0; t < options.instances; ++t) {
      const std::size_t n = 4 + uniform_below(rng, 11);
      const double density = uniform_open01(rng);
      std::vector<Edge> edges;
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
          for (Vertex c = b + 1; c < n; ++c)
            for (Vertex d = c + 1; d < n; ++d)
              if (uniform_open01(rng) < density) edges.push_back({a, b, c, d});
      const FourGraph g = FourGraph::from_edges(n, edges);
      const AlphaResult exact = certify(g);
      if (exact.alpha != alpha_bruteforce(g).alpha || !is_independent(g, exact.witness)) ++mismatches;
      if (!satisfies_thomasse_yeo(g, exact.alpha)) ++ty_failures;
    }
    r.expect("branch and bound equals brute force on " + std::to_string(options.instances) +
                 " random graphs",
             mismatches == 0, std::to_string(mismatches) + " mismatches");
    r.expect("transversal inequality holds on every exact solve", ty_failures == 0);
  });

  r.guarded("parity", [&] {
    std::size_t failures = 0, graphs = 0;
    const std::size_t seeds = 20;
    for (std::size_t n = 0; n <= 12; ++n)
      for (std::size_t m = 0; n + m <= 12; ++m)
        for (std::size_t s = 0; s < seeds; ++s) {
          const Construction c =
              parity_construction(ParitySpec::random(n, m, derive_seed(options.seed, "verify-parity", s)));
          ++graphs;
          if (alpha_bruteforce(c.graph.graph()).alpha > 4) ++failures;
        }
    r.expect("parity construction: every 5-set contains an edge (" + std::to_string(graphs) +
                 " graphs)",
             failures == 0);
  });
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"tables", "formulas", "invariants", "all"};
  return names;
}

std::vector<Check> run_verify(const std::string& suite, const VerifyOptions& options) {
  std::vector<Check> out;
  const auto append = [&](Recorder&& rec) {
    auto part = rec.take();
    out.insert(out.end(), part.begin(), part.end());
  };
  bool known = false;
  if (suite == "tables" || suite == "all") {
    Recorder r("tables");
    tables_suite(r);
    append(std::move(r));
    known = true;
  }
  if (suite == "formulas" || suite == "all") {
    Recorder r("formulas");
    formulas_suite(r);
    append(std::move(r));
    known = true;
  }
  if (suite == "invariants" || suite == "all") {
    Recorder r("invariants");
    invariants_suite(r, options);
    append(std::move(r));
    known = true;
  }
  if (!known) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

nlohmann::json checks_to_json(const std::vector<Check>& checks) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : checks)
    out.push_back({{"suite", c.suite},
                   {"name", c.name},
                   {"status", c.status == CheckStatus::Pass ? "pass"
                                                            : (c.status == CheckStatus::Fail ? "fail" : "info")},
                   {"detail", c.detail}});
  return out;
}

}  // namespace turan4

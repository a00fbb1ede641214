#include "turan4/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "turan4/alpha_solver.hpp"
#include "turan4/bounds.hpp"
#include "turan4/constructions.hpp"
#include "turan4/error.hpp"
#include "turan4/graph_io.hpp"
#include "turan4/simplex.hpp"
#include "turan4/verify.hpp"

namespace turan4 {
namespace {

struct Common {
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format;
};

struct ConstructArgs {
  std::string name;
  std::size_t n = 0, m = 0;
  bool zero = false;
  std::size_t variant = 0;
  int example = 1;
  std::size_t size = 2;
  std::size_t circ_m = 2;
  unsigned rainbow_k = 0;
  unsigned k = 1;
  unsigned lambda = 1;
  std::vector<int> b_set;
  bool counts_only = false;
};

struct AlphaArgs {
  std::string file;
  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_seconds;
  std::string kernel;
  bool brute = false;
};

std::optional<std::uint64_t> env_node_cap() {
  const char* v = std::getenv("TURAN_BUDGET_NODES");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::InvalidArgument, "TURAN_BUDGET_NODES must be an integer");
  return n;
}

SolveBudget resolve_budget(std::size_t n, const AlphaArgs& a) {
  SolveBudget b = SolveBudget::default_for(n);
  if (auto cap = env_node_cap()) b.max_nodes = *cap;
  if (a.max_nodes) b.max_nodes = *a.max_nodes;
  if (a.max_seconds) b.max_seconds = *a.max_seconds;
  return b;
}

std::string describe_budget(const SolveBudget& b) {
  std::string s = "nodes=" + (b.max_nodes ? std::to_string(*b.max_nodes) : std::string("unbounded"));
  if (b.max_seconds) {
    std::ostringstream t;
    t << *b.max_seconds;
    s += ", seconds=" + t.str();
  }
  return s;
}

std::string default_budget_description() {
  const auto cap = env_node_cap();
  return cap ? "nodes=" + std::to_string(*cap) : "nodes=default (unbounded up to 48 vertices, 1e8 above)";
}

nlohmann::json meta(const Common& c, const std::string& command, const std::string& budget) {
  return {{"tool", "turan4"},
          {"version", TURAN4_VERSION},
          {"command", command},
          {"seed", c.seed},
          {"budget", budget}};
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + c.out_path);
  f << text;
}

Construction build_named(const ConstructArgs& a, std::uint64_t seed, std::string& params) {
  if (a.name == "parity") {
    params = "n=" + std::to_string(a.n) + " m=" + std::to_string(a.m) +
             (a.zero ? " matrix=zero" : " matrix=random");
    return parity_construction(a.zero ? ParitySpec::zero(a.n, a.m) : ParitySpec::random(a.n, a.m, seed));
  }
  if (a.name == "k5line") return k5_line_construction();
  if (a.name == "twok6") {
    params = "variant=" + std::to_string(a.variant);
    return two_k6_construction(a.variant);
  }
  if (a.name == "z2cube") return z2cube_construction();
  if (a.name == "fano") return fano_complement();
  if (a.name == "expansion") {
    params = "example=" + std::to_string(a.example) + " size=" + std::to_string(a.size);
    if (a.example == 1) return expansion_build(example1_expansion(a.size));
    if (a.example == 2) return expansion_build(example2_expansion(a.size));
    throw Error(ErrorCode::InvalidArgument, "--example must be 1 or 2");
  }
  if (a.name == "circular") {
    params = "m=" + std::to_string(a.circ_m);
    if (a.rainbow_k > 0) {
      params += " rainbow_k=" + std::to_string(a.rainbow_k);
      return circular_build(rainbow_circular_spec(a.rainbow_k, a.circ_m));
    }
    return circular_build(zero_sum_circular_spec(a.circ_m));
  }
  if (a.name == "rainbow") {
    params = "k=" + std::to_string(a.k);
    return rainbow_build(a.k);
  }
  if (a.name == "hm") {
    HmSpec spec = HmSpec::first_lambda(a.circ_m, a.lambda);
    if (!a.b_set.empty()) spec.b_set = a.b_set;
    params = "m=" + std::to_string(spec.m) + " lambda=" + std::to_string(spec.lambda());
    return hm_build(spec);
  }
  throw Error(ErrorCode::UnknownConstruction, "'" + a.name + "'");
}

std::optional<Census> counts_named(const ConstructArgs& a, std::uint64_t seed) {
  if (a.name == "parity")
    return parity_counts(a.zero ? ParitySpec::zero(a.n, a.m) : ParitySpec::random(a.n, a.m, seed));
  if (a.name == "expansion") {
    if (a.example != 1 && a.example != 2) throw Error(ErrorCode::InvalidArgument, "--example must be 1 or 2");
    return expansion_counts(a.example == 1 ? example1_expansion(a.size) : example2_expansion(a.size));
  }
  if (a.name == "circular" && a.rainbow_k == 0) return circular_counts(zero_sum_circular_spec(a.circ_m));
  if (a.name == "rainbow") {
    const RainbowCounts r = rainbow_counts(a.k);
    Census c;
    c.add("E0", r.e0);
    c.add("E1", r.e1);
    c.add("E2", r.e2);
    c.add("E4", r.e4);
    return c;
  }
  if (a.name == "hm") {
    HmSpec spec = HmSpec::first_lambda(a.circ_m, a.lambda);
    if (!a.b_set.empty()) spec.b_set = a.b_set;
    validate_hm(spec);
    return hm_type_formula(spec.m, spec.lambda());
  }
  return std::nullopt;
}

int cmd_construct(const Common& c, const ConstructArgs& a, std::ostream& out) {
  const auto& names = construction_names();
  if (std::find(names.begin(), names.end(), a.name) == names.end())
    throw Error(ErrorCode::UnknownConstruction, "'" + a.name + "'");
  if (a.counts_only) {
    std::string params;
    std::optional<Census> census = counts_named(a, c.seed);
    if (!census) census = build_named(a, c.seed, params).census;
    nlohmann::json j{{"meta", meta(c, "construct " + a.name, default_budget_description())},
                     {"construction", a.name},
                     {"census", census->to_json()},
                     {"edges", to_string(census->total())}};
    emit(c, j.dump(2) + "\n", out);
    return kExitOk;
  }
  std::string params;
  const Construction g = build_named(a, c.seed, params);
  std::vector<std::string> comments = {
      std::string("turan4 ") + TURAN4_VERSION + " seed=" + std::to_string(c.seed) +
          " budget=" + default_budget_description(),
      "construct " + a.name + (params.empty() ? "" : " " + params),
      "v=" + std::to_string(g.graph.vertex_count()) + " e=" + std::to_string(g.graph.edge_count())};
  std::string census_line = "census";
  for (const auto& [name, count] : g.census.families) census_line += " " + name + "=" + to_string(count);
  comments.push_back(census_line);

  std::string text;
  if (c.format == "json") {
    nlohmann::json j = to_json(g.graph);
    j["meta"] = meta(c, "construct " + a.name, default_budget_description());
    j["census"] = g.census.to_json();
    text = j.dump() + "\n";
  } else {
    text = to_t4g(g.graph, comments);
  }
  emit(c, text, out);
  if (!c.out_path.empty()) {
    out << "v=" << g.graph.vertex_count() << " e=" << g.graph.edge_count() << "\n";
    for (const auto& [name, count] : g.census.families) out << name << "=" << count << "\n";
  }
  return kExitOk;
}

int cmd_alpha(const Common& c, const AlphaArgs& a, std::ostream& out) {
  if (!a.kernel.empty() && !kernels::select(a.kernel))
    throw Error(ErrorCode::InvalidArgument, "kernel '" + a.kernel + "' is not available");
  const LabeledFourGraph g = read_graph_file(a.file);
  const SolveBudget budget = resolve_budget(g.vertex_count(), a);
  const AlphaResult r = a.brute ? alpha_bruteforce(g.graph()) : alpha_exact(g.graph(), budget);
  nlohmann::json j{{"meta", meta(c, "alpha", a.brute ? std::string("bruteforce") : describe_budget(budget))},
                   {"v", g.vertex_count()},
                   {"e", g.edge_count()},
                   {"alpha", r.alpha},
                   {"status", std::string(to_string(r.status))},
                   {"witness", r.witness},
                   {"nodes", r.nodes_explored}};
  emit(c, j.dump(2) + "\n", out);
  return r.status == SolveStatus::Exact ? kExitOk : kExitBudget;
}

int cmd_verify(const Common& c, const std::string& suite, const VerifyOptions& opt, std::ostream& out) {
  const auto checks = run_verify(suite, opt);
  std::string text;
  if (c.format == "json") {
    nlohmann::json j{{"meta", meta(c, "verify " + suite, default_budget_description())},
                     {"passed", all_passed(checks)},
                     {"checks", checks_to_json(checks)}};
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "# turan4 " << TURAN4_VERSION << " verify " << suite << " seed=" << c.seed
      << " samples=" << opt.samples << " instances=" << opt.instances
      << " budget=" << default_budget_description() << "\n";
    for (const auto& ch : checks) {
      const char* tag = ch.status == CheckStatus::Pass ? "PASS" : ch.status == CheckStatus::Fail ? "FAIL" : "INFO";
      s << tag << " [" << ch.suite << "] " << ch.name;
      if (!ch.detail.empty()) s << " (" << ch.detail << ")";
      s << "\n";
    }
    s << (all_passed(checks) ? "all checks passed\n" : "some checks FAILED\n");
    text = s.str();
  }
  emit(c, text, out);
  return all_passed(checks) ? kExitOk : kExitVerifyFailed;
}

std::string render_report(const Common& c, const std::vector<BoundRecord>& rows, const std::string& command,
                          std::size_t restarts) {
  const std::string header = std::string("turan4 ") + TURAN4_VERSION + " " + command +
                             " seed=" + std::to_string(c.seed) + " restarts=" + std::to_string(restarts) +
                             " budget=" + default_budget_description();
  if (c.format == "json") {
    nlohmann::json j{{"meta", meta(c, command, "n/a")}, {"rows", render_json(rows)}};
    j["meta"]["restarts"] = restarts;
    j["meta"]["budget"] = default_budget_description();
    return j.dump(2) + "\n";
  }
  if (c.format == "csv") return "# " + header + "\n" + render_csv(rows);
  if (c.format.empty() || c.format == "md") return "<!-- " + header + " -->\n" + render_markdown(rows);
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + c.format + "'");
}

int cmd_tvalues(const Common& c, std::ostream& out) {
  const ExternalConstants published = load_external_constants();
  std::string text;
  if (c.format == "json") {
    nlohmann::json j{{"meta", meta(c, "bounds tvalues", "n/a")},
                     {"version", published.version},
                     {"values", published.table.to_json()}};
    text = j.dump(2) + "\n";
  } else {
    text = std::string("<!-- turan4 ") + TURAN4_VERSION + " bounds tvalues seed=" + std::to_string(c.seed) +
           " budget=n/a constants_version=" + std::to_string(published.version) + " -->\n" + render_table_markdown(published.table);
  }
  emit(c, text, out);
  return kExitOk;
}

int cmd_optimize(const Common& c, const std::string& target, std::size_t restarts, std::ostream& out) {
  if (target != "example2") throw Error(ErrorCode::InvalidArgument, "unknown objective '" + target + "'");
  const ExpansionObjective obj = ExpansionObjective::from_spec(example2_expansion(1));
  MinimizeOptions opt;
  opt.seed = c.seed;
  opt.restarts = restarts;
  const OptimizerResult r = minimize(obj, opt);
  std::vector<std::string> x_exact;
  for (const auto& q : r.x_exact) x_exact.push_back(q.to_string());
  nlohmann::json j{{"meta", meta(c, "optimize " + target, default_budget_description())},
                   {"restarts", restarts},
                   {"x", r.x},
                   {"x_exact", x_exact},
                   {"value", r.value},
                   {"value_certified_num", to_string(r.value_certified.num())},
                   {"value_certified_den", to_string(r.value_certified.den())},
                   {"value_certified_decimal", r.value_certified.to_decimal(6, Rounding::Up)},
                   {"iterations", r.iterations},
                   {"converged", r.converged},
                   {"best_restart", r.best_restart}};
  emit(c, j.dump(2) + "\n", out);
  return kExitOk;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::InvariantViolated:
    case ErrorCode::UncertifiedAlpha:
    case ErrorCode::TableConflict:
      return kExitVerifyFailed;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructions, exact independence numbers and density bounds for 4-graphs", "turan4"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(TURAN4_VERSION));
  Common common;
  app.add_option("--seed", common.seed, "Global random seed")->capture_default_str();

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a construction and write it as t4g or JSON");
  construct->add_option("name", ca.name, "parity, k5line, twok6, z2cube, fano, expansion, circular, rainbow, hm")
      ->required();
  construct->add_option("--n", ca.n, "parity: size of X");
  construct->add_option("--m", ca.circ_m, "circular/hm: cycle length; parity: size of Y");
  construct->add_flag("--zero", ca.zero, "parity: all-zero matrix");
  construct->add_option("--variant", ca.variant, "twok6: variant index");
  construct->add_option("--example", ca.example, "expansion: 1 or 2");
  construct->add_option("--size", ca.size, "expansion: part size");
  construct->add_option("--rainbow-k", ca.rainbow_k, "circular: use rainbow H_k parts");
  construct->add_option("--k", ca.k, "rainbow: depth");
  construct->add_option("--lambda", ca.lambda, "hm: lambda");
  construct->add_option("--b", ca.b_set, "hm: elements of B (0..3)");
  construct->add_flag("--counts-only", ca.counts_only, "Print the family census as JSON");
  construct->add_option("--out", common.out_path, "Output file");
  construct->add_option("--format", common.format, "t4g or json")->check(CLI::IsMember({"t4g", "json"}));

  AlphaArgs aa;
  auto* alpha = app.add_subcommand("alpha", "Exact independence number of a t4g or JSON graph");
  alpha->add_option("file", aa.file)->required();
  alpha->add_option("--max-nodes", aa.max_nodes, "Node cap (overrides TURAN_BUDGET_NODES)");
  alpha->add_option("--max-seconds", aa.max_seconds, "Wall-time cap");
  alpha->add_option("--kernel", aa.kernel, "scalar or avx2");
  alpha->add_flag("--bruteforce", aa.brute, "Use the exhaustive oracle (n <= 24)");
  alpha->add_option("--out", common.out_path, "Output file");

  std::string suite = "all";
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite, "tables, formulas, invariants or all")
      ->check(CLI::IsMember(verify_suites()));
  verify->add_option("--samples", vo.samples, "Sampled independent sets for the H_m suite");
  verify->add_option("--instances", vo.instances, "Random graphs for the solver check");
  verify->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", common.out_path, "Output file");

  std::string table = "table9";
  std::size_t restarts = 32;
  auto* bounds = app.add_subcommand("bounds", "Density bounds and tables");
  bounds->add_option("table", table, "table9 or tvalues")->check(CLI::IsMember({"table9", "tvalues"}));
  bounds->add_option("--format", common.format, "md, json or csv")->check(CLI::IsMember({"md", "json", "csv"}));
  bounds->add_option("--restarts", restarts, "Optimizer restarts for the k = 6 row");
  bounds->add_option("--out", common.out_path, "Output file");

  std::string target;
  auto* optimize = app.add_subcommand("optimize", "Optimise expansion part sizes");
  optimize->add_option("objective", target, "example2")->required();
  optimize->add_option("--restarts", restarts, "Number of restarts");
  optimize->add_option("--out", common.out_path, "Output file");

  auto* report = app.add_subcommand("report", "Summary table of t_*(k,4) upper bounds");
  report->add_option("--format", common.format, "md, json or csv")->check(CLI::IsMember({"md", "json", "csv"}));
  report->add_option("--restarts", restarts, "Optimizer restarts for the k = 6 row");
  report->add_option("--out", common.out_path, "Output file");

  for (auto* sub : app.get_subcommands({})) sub->add_option("--seed", common.seed, "Global random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << TURAN4_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "turan4: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*construct) {
      if (ca.name == "parity") ca.m = ca.circ_m, ca.circ_m = 0;
      return cmd_construct(common, ca, out);
    }
    if (*alpha) return cmd_alpha(common, aa, out);
    if (*verify) {
      vo.seed = common.seed;
      return cmd_verify(common, suite, vo, out);
    }
    if (*bounds) {
      if (table == "tvalues") return cmd_tvalues(common, out);
      ReportOptions ro{common.seed, restarts};
      emit(common, render_report(common, table9_report(ro), "bounds table9", restarts), out);
      return kExitOk;
    }
    if (*optimize) return cmd_optimize(common, target, restarts, out);
    if (*report) {
      ReportOptions ro{common.seed, restarts};
      emit(common, render_report(common, table9_report(ro), "report", restarts), out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "turan4: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "turan4: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace turan4

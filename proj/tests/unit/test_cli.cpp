#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "turan4/cli.hpp"

using namespace turan4;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "turan4");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with 3") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"construct", "nonsense"}).code == kExitUsage);
  CHECK(run({"construct", "twok6", "--variant", "100000"}).code == kExitUsage);
  CHECK(run({"alpha", "/nonexistent/graph.t4g"}).code == kExitUsage);
  CHECK(run({"bounds", "table9", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("construct then alpha") {
  const auto path = (std::filesystem::temp_directory_path() / "turan4_cli_k5.t4g").string();
  const Run c = run({"construct", "k5line", "--out", path});
  REQUIRE(c.code == kExitOk);
  CHECK(c.out.find("e=20") != std::string::npos);
  const Run a = run({"alpha", path});
  CHECK(a.code == kExitOk);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["alpha"] == 5);
  CHECK(j["status"] == "Exact");
  CHECK(j["witness"].size() == 5);

  const Run capped = run({"alpha", path, "--max-nodes", "1"});
  CHECK(capped.code == kExitBudget);
  CHECK(nlohmann::json::parse(capped.out)["status"] == "LowerBoundOnly");
  std::filesystem::remove(path);
}

TEST_CASE("outputs are byte-identical across runs") {
  const Run a = run({"construct", "circular", "--m", "2", "--seed", "5"});
  const Run b = run({"construct", "circular", "--m", "2", "--seed", "5"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed=5") != std::string::npos);
  const Run r1 = run({"report", "--restarts", "4"});
  const Run r2 = run({"report", "--restarts", "4"});
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("0.706335") != std::string::npos);
}

TEST_CASE("counts only") {
  const Run r = run({"construct", "hm", "--m", "5", "--lambda", "4", "--counts-only"});
  REQUIRE(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["edges"] == "2044080");
  const Run big = run({"construct", "rainbow", "--k", "9", "--counts-only"});
  CHECK(big.code == kExitOk);
}

TEST_CASE("bounds and optimize") {
  const Run csv = run({"bounds", "table9", "--format", "csv", "--restarts", "2"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.find("k,kind,t_star_decimal") != std::string::npos);
  const Run tv = run({"bounds", "tvalues", "--format", "json"});
  CHECK(tv.code == kExitOk);
  const Run opt = run({"optimize", "example2", "--restarts", "4"});
  REQUIRE(opt.code == kExitOk);
  const auto j = nlohmann::json::parse(opt.out);
  CHECK(j["x"].size() == 8);
  CHECK(j["value"].get<double>() < 0.80262);
}

TEST_CASE("verify reports failures through the exit code") {
  const Run r = run({"verify", "formulas"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "everything"}).code == kExitUsage);
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace turan4 {

enum class CheckStatus { Pass, Fail, Info };

struct Check {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Sampled independent sets for the H_m invariant suite.
  std::size_t samples = 1000;
  /// Random graphs for the solver equivalence check.
  std::size_t instances = 200;
};

/// suite is one of tables, formulas, invariants, all. Throws InvalidArgument.
std::vector<Check> run_verify(const std::string& suite, const VerifyOptions& options);
const std::vector<std::string>& verify_suites();

bool all_passed(const std::vector<Check>& checks);
nlohmann::json checks_to_json(const std::vector<Check>& checks);

}  // namespace turan4

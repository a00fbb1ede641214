#include <cstdlib>
#include <fstream>

#include "turan4/bounds.hpp"
#include "turan4/error.hpp"

namespace turan4 {

std::filesystem::path default_constants_path() {
  if (const char* env = std::getenv("TURAN4_CONSTANTS")) return env;
  return std::filesystem::path(TURAN4_DATA_DIR) / "external_constants.json";
}

ExternalConstants parse_external_constants(const nlohmann::json& j) {
  try {
    ExternalConstants out;
    out.version = j.at("version").get<int>();
    for (const auto& row : j.at("turan_values")) {
      const auto n = row.at("n").get<std::size_t>();
      const auto k = row.at("k").get<unsigned>();
      const auto cite = row.at("cite").get<std::string>();
      if (row.contains("lower"))
        out.table.add_lower(n, k, BigInt(std::to_string(row["lower"].get<long long>())), cite);
      if (row.contains("upper"))
        out.table.add_upper(n, k, BigInt(std::to_string(row["upper"].get<long long>())), cite);
    }
    if (j.contains("densities"))
      for (const auto& row : j.at("densities"))
        out.densities.push_back({row.at("k").get<unsigned>(),
                                 Rational::parse(row.at("t_star_upper").get<std::string>()),
                                 row.at("cite").get<std::string>()});
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("external constants: ") + e.what());
  }
}

ExternalConstants load_external_constants(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  try {
    return parse_external_constants(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

}  // namespace turan4

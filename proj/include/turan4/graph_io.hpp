#pragma once

// t4g text format:
//   n <count>
//   e <count>
//   a b c d            one edge per line, ascending indices
//   # label <i> <t...>  optional label of vertex i
// Other '#' lines are comments. A JSON mirror carries {n, edges, labels}.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "turan4/four_graph.hpp"

namespace turan4 {

std::string to_t4g(const LabeledFourGraph& g, std::span<const std::string> comments = {});
LabeledFourGraph parse_t4g(std::string_view text);

nlohmann::json to_json(const LabeledFourGraph& g);
LabeledFourGraph graph_from_json(const nlohmann::json& j);

/// Reads t4g or JSON, detected from the first non-blank character.
LabeledFourGraph read_graph_file(const std::filesystem::path& path);

}  // namespace turan4

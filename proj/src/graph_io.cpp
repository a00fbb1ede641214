#include "turan4/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "turan4/error.hpp"

namespace turan4 {
namespace {

std::vector<long long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc())
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected integer");
    pos = static_cast<std::size_t>(ptr - line.data());
    out.push_back(value);
  }
  return out;
}

std::size_t parse_header(std::string_view line, char key, std::size_t line_no) {
  if (line.size() < 3 || line[0] != key || line[1] != ' ')
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": expected '" + key + " <count>'");
  const auto values = parse_ints(line.substr(2), line_no);
  if (values.size() != 1 || values[0] < 0)
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad count");
  return static_cast<std::size_t>(values[0]);
}

}  // namespace

std::string to_t4g(const LabeledFourGraph& g, std::span<const std::string> comments) {
  std::ostringstream os;
  for (const std::string& c : comments) os << "# " << c << '\n';
  os << "n " << g.vertex_count() << "\ne " << g.edge_count() << "\n";
  for (const Edge& e : g.graph().edges()) os << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << e[3] << '\n';
  for (std::size_t v = 0; v < g.labels().size(); ++v) {
    os << "# label " << v;
    for (int t : g.labels()[v]) os << ' ' << t;
    os << '\n';
  }
  return os.str();
}

LabeledFourGraph parse_t4g(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::size_t stop = end == std::string_view::npos ? text.size() : end;
    lines.push_back(text.substr(start, stop - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }

  std::size_t idx = 0;
  auto next_content = [&]() -> std::string_view {
    while (idx < lines.size() && (lines[idx].find_first_not_of(" \t\r") == std::string_view::npos ||
                                  lines[idx].front() == '#'))
      ++idx;
    return idx < lines.size() ? lines[idx] : std::string_view{};
  };

  if (next_content().empty()) throw Error(ErrorCode::ParseError, "empty input");
  const std::size_t n = parse_header(lines[idx], 'n', idx + 1);
  ++idx;
  if (next_content().empty()) throw Error(ErrorCode::ParseError, "missing edge count line");
  const std::size_t e = parse_header(lines[idx], 'e', idx + 1);
  ++idx;

  std::vector<Edge> edges;
  std::map<std::size_t, Label> labels;
  for (; idx < lines.size(); ++idx) {
    std::string_view line = lines[idx];
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    if (line.front() == '#') {
      constexpr std::string_view tag = "# label ";
      if (line.substr(0, tag.size()) == tag) {
        const auto values = parse_ints(line.substr(tag.size()), idx + 1);
        if (values.empty() || values[0] < 0 || static_cast<std::size_t>(values[0]) >= n)
          throw Error(ErrorCode::ParseError, "line " + std::to_string(idx + 1) + ": bad label index");
        labels[static_cast<std::size_t>(values[0])] = Label(values.begin() + 1, values.end());
      }
      continue;
    }
    const auto values = parse_ints(line, idx + 1);
    if (values.size() != 4)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(idx + 1) + ": edge needs 4 indices");
    Edge edge{};
    for (int t = 0; t < 4; ++t) {
      if (values[t] < 0)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(idx + 1) + ": negative index");
      edge[t] = static_cast<Vertex>(values[t]);
    }
    edges.push_back(edge);
  }
  if (edges.size() != e)
    throw Error(ErrorCode::ParseError, "declared " + std::to_string(e) + " edges, found " +
                                           std::to_string(edges.size()));
  FourGraph graph = FourGraph::from_edges(n, edges);
  if (graph.edge_count() != e) throw Error(ErrorCode::ParseError, "duplicate edges in input");

  std::vector<Label> label_vec;
  if (!labels.empty()) {
    if (labels.size() != n) throw Error(ErrorCode::ParseError, "labels given for only some vertices");
    for (auto& [v, l] : labels) label_vec.push_back(std::move(l));
  }
  return LabeledFourGraph(std::move(graph), std::move(label_vec));
}

nlohmann::json to_json(const LabeledFourGraph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.graph().edges()) edges.push_back({e[0], e[1], e[2], e[3]});
  j["edges"] = std::move(edges);
  nlohmann::json labels = nlohmann::json::array();
  for (const Label& l : g.labels()) labels.push_back(l);
  j["labels"] = std::move(labels);
  return j;
}

LabeledFourGraph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<std::vector<Vertex>> subsets = j.at("edges").get<std::vector<std::vector<Vertex>>>();
    std::vector<Label> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<Label>>();
    return LabeledFourGraph(FourGraph::from_edges(n, subsets), std::move(labels));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

LabeledFourGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return graph_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& ex) {
      throw Error(ErrorCode::ParseError, ex.what());
    }
  }
  return parse_t4g(text);
}

}  // namespace turan4

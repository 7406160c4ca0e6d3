#include <json.hpp>
#include <sstream>

#include "zdg/errors.hpp"
#include "zdg/graph.hpp"

namespace zdg {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string export_dot(const SimpleGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << " [label=\"" << dot_escape(g.label(v)) << "\"];\n";
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const SimpleGraph& g, int indent) {
  nlohmann::json j;
  j["n"] = g.order();
  j["labels"] = g.labels();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  return j.dump(indent);
}

SimpleGraph graph_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const int n = j.at("n").get<int>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    SimpleGraph g(n, std::move(labels));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidSpec("edges must be pairs");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("graph document: ") + e.what());
  }
}

}  // namespace zdg

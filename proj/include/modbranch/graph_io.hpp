#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "modbranch/digraph.hpp"

namespace modbranch {

/// Graphviz form, one line per vertex and per edge, levels drawn upwards.
inline std::string export_dot(const LeveledDigraph& g) {
  std::string s = "digraph branching {\n  rankdir=BT;\n";
  for (const auto& v : g.vertices())
    s += "  \"" + v.text() + "\";\n";
  for (const auto& e : g.edges())
    s += "  \"" + e.first.text() + "\" -> \"" + e.second.text() + "\";\n";
  s += "}\n";
  return s;
}

/// Compact JSON object with keys alpha, max_level, vertices, edges.
/// Vertex labels are arrays of part lists; edge endpoints are text labels.
inline std::string export_json(const LeveledDigraph& g) {
  nlohmann::ordered_json j;
  j["alpha"] = g.alpha();
  j["max_level"] = g.max_level();
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) {
    nlohmann::ordered_json label = nlohmann::ordered_json::array();
    for (const auto& c : v.comps) label.push_back(c.parts());
    j["vertices"].push_back({{"label", label}, {"level", v.level()}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back({e.first.text(), e.second.text()});
  return j.dump();
}

inline std::string export_graph(const LeveledDigraph& g, const std::string& format) {
  if (format == "dot") return export_dot(g);
  if (format == "json") return export_json(g);
  throw std::invalid_argument("unknown export format: " + format);
}

}  // namespace modbranch

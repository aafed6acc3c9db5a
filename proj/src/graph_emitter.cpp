#include <sstream>

#include "csm/codegen.hpp"

namespace csm {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string node_id(const Block& b, const std::string& state) { return quote(b.name + "." + state); }

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

}  // namespace

GraphDoc emit_graph(const Model& model) {
  std::ostringstream out;
  out << "digraph CSM {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=ellipse];\n";

  for (const auto& b : model.blocks) {
    out << "\n  subgraph cluster_" << b.name << " {\n";
    std::string label = b.name;
    if (!b.requirement_tags.empty()) label += "\\n" + join(b.requirement_tags, ", ");
    out << "    label=\"" << label << "\";\n";

    for (const auto& state : b.states_in_order()) {
      std::string text = state;
      for (const auto& inv : b.invariants) {
        if (inv.state == state) text += "\\n" + to_string(inv.condition);
      }
      out << "    " << node_id(b, state) << " [label=\"" << text << "\"";
      if (state == b.initial) {
        out << ", style=bold, penwidth=3";
      } else if (b.is_transient(state)) {
        out << ", style=dashed";
      } else {
        out << ", style=solid";
      }
      out << "];\n";
    }

    for (const auto& t : b.transitions) {
      std::string label = t.tc;
      if (t.is_delta()) label += "(" + *t.delta_param + ")";
      for (const auto& g : b.guards) {
        if (g.tc == t.tc) label += " " + to_string(g.condition);
      }
      out << "    " << node_id(b, t.path[0]) << " -> " << node_id(b, t.path[1]) << " [style=solid, label=\""
          << label << "\"];\n";
      for (std::size_t i = 1; i + 1 < t.path.size(); ++i) {
        out << "    " << node_id(b, t.path[i]) << " -> " << node_id(b, t.path[i + 1]) << " [style=dotted, label=\""
            << to_string(t.durations[i - 1]) << "\"];\n";
      }
    }
    out << "  }\n";
  }
  out << "}\n";
  return GraphDoc{out.str()};
}

}  // namespace csm

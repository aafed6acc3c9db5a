#include <sstream>

#include "csm/parser.hpp"

namespace csm {

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

void print_tags(std::ostream& out, const std::vector<std::string>& tags, const char* indent) {
  if (!tags.empty()) out << indent << "# " << join(tags, ", ") << '\n';
}

}  // namespace

std::string print_csm(const Model& model) {
  std::ostringstream out;
  for (const auto& c : model.consts) out << "const " << c.name << ' ' << c.value << '\n';

  bool first = model.consts.empty();
  for (const auto& b : model.blocks) {
    if (!first) out << '\n';
    first = false;
    print_tags(out, b.requirement_tags, "");
    out << "block " << b.name << " :=\n";
    out << "  init (" << b.initial << ")\n";
    for (const auto& t : b.transitions) {
      print_tags(out, t.requirement_tags, "  ");
      out << "  " << (t.is_delta() ? "tcd (" + *t.delta_param + ") " : "tc ") << t.tc << " (" << join(t.path, ",")
          << ") {";
      for (std::size_t i = 0; i < t.durations.size(); ++i) out << (i > 0 ? ", " : "") << to_string(t.durations[i]);
      out << "}\n";
    }
    for (const auto& g : b.guards) out << "  guard (" << g.tc << ") " << to_string(g.condition) << '\n';
    for (const auto& inv : b.invariants) out << "  inv (" << inv.state << ") " << to_string(inv.condition) << '\n';
  }
  return out.str();
}

}  // namespace csm

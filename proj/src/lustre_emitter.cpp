#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "csm/codegen.hpp"

namespace csm {

namespace {

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> kWords{
      "and",   "assert", "bool",    "const", "current", "div",     "else",  "enum",     "extern", "false",
      "fby",   "function", "if",    "include", "int",   "let",     "merge", "mod",      "model",  "node",
      "nor",   "not",    "of",      "operator", "or",   "package", "pre",   "provides", "real",   "returns",
      "step",  "struct", "tel",     "then",  "true",    "type",    "unsafe", "uses",    "var",    "when",
      "with",  "xor"};
  return kWords;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

/// Names declared in one Lustre scope; rejects duplicates and keywords.
class Scope {
 public:
  Scope(std::string what, const Scope* parent = nullptr) : what_(std::move(what)), parent_(parent) {}

  const std::string& declare(const std::string& name) {
    if (reserved_words().contains(name)) throw CodegenError("identifier '" + name + "' in " + what_ + " is a Lustre keyword");
    if (clashes(name) || !names_.insert(name).second) {
      throw CodegenError("identifier '" + name + "' is declared twice in " + what_);
    }
    return name;
  }

 private:
  bool clashes(const std::string& name) const {
    return parent_ != nullptr && (parent_->names_.contains(name) || parent_->clashes(name));
  }

  std::string what_;
  const Scope* parent_;
  std::set<std::string> names_;
};

std::string literal(const Block& b, const std::string& state) { return b.name + "_" + state; }
std::string type_name(const Block& b) { return b.name + "_state"; }
std::string signal(const Transition& t) { return lower(t.tc); }
std::string delta_input(const Transition& t) { return signal(t) + "_" + *t.delta_param; }
std::string delta_held(const Transition& t) { return delta_input(t) + "_held"; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

class LustreWriter {
 public:
  explicit LustreWriter(const Model& model) : model_(model) {}

  SyncProgram run() {
    for (const auto& c : model_.consts) globals_.declare(c.name);
    for (const auto& b : model_.blocks) {
      globals_.declare(b.name);
      globals_.declare(type_name(b));
      for (const auto& s : b.states_in_order()) globals_.declare(literal(b, s));
    }
    globals_.declare("OBSW");

    out_ << "-- Generated from a CSM model. One node per block, OBSW composes them.\n";
    if (!model_.consts.empty()) out_ << '\n';
    for (const auto& c : model_.consts) out_ << "const " << c.name << ": int = " << c.value << ";\n";
    for (const auto& b : model_.blocks) emit_block(b);
    emit_controller();
    program_.text = out_.str();
    return std::move(program_);
  }

 private:
  std::string duration(const Transition& t, std::size_t slot, bool at_dispatch) const {
    const DurationTerm& term = t.durations[slot];
    if (term.is_literal()) return std::to_string(term.literal());
    if (t.is_delta() && term.name() == *t.delta_param) return at_dispatch ? delta_input(t) : delta_held(t);
    return term.name();
  }

  void emit_block(const Block& b) {
    Scope scope("node " + b.name, &globals_);
    SyncNode node;
    node.name = b.name;
    for (const auto& t : b.transitions) node.inputs.push_back(scope.declare(signal(t)) + ": bool");
    for (const auto& t : b.transitions) {
      if (t.is_delta()) node.inputs.push_back(scope.declare(delta_input(t)) + ": int");
    }
    node.outputs = {scope.declare("state") + ": " + type_name(b), scope.declare("error") + ": bool"};
    std::vector<std::string> locals = {"prev: " + type_name(b), "prev_timer: int", "expired: bool",
                                       "settled: " + type_name(b), "timer: int"};
    for (const char* name : {"prev", "prev_timer", "expired", "settled", "timer"}) scope.declare(name);
    for (const auto& t : b.transitions) {
      if (t.is_delta()) locals.push_back(scope.declare(delta_held(t)) + ": int");
    }

    out_ << "\n-- " << b.name;
    if (!b.requirement_tags.empty()) out_ << " (" << join(b.requirement_tags, ", ") << ")";
    out_ << "\ntype " << type_name(b) << " = enum { ";
    std::vector<std::string> literals;
    for (const auto& s : b.states_in_order()) literals.push_back(literal(b, s));
    out_ << join(literals, ", ") << " };\n\n";

    out_ << "node " << b.name << "(" << join(node.inputs, "; ") << ")\n";
    out_ << "returns (" << join(node.outputs, "; ") << ");\n";
    out_ << "var\n";
    for (const auto& l : locals) out_ << "  " << l << ";\n";
    out_ << "let\n";
    out_ << "  prev = " << literal(b, b.initial) << " -> pre(state);\n";
    out_ << "  prev_timer = 0 -> pre(timer);\n";
    out_ << "  expired = prev_timer = 1;\n";

    for (const auto& t : b.transitions) {
      if (t.is_delta()) {
        out_ << "  " << delta_held(t) << " = if " << signal(t) << " then " << delta_input(t) << " else (0 -> pre("
             << delta_held(t) << "));\n";
      }
    }

    // Timeouts: a transient state moves on when its countdown expires.
    out_ << "  settled =";
    for (const auto& t : b.transitions) {
      for (std::size_t i = 1; i + 1 < t.path.size(); ++i) {
        out_ << "\n    if expired and prev = " << literal(b, t.path[i]) << " then " << literal(b, t.path[i + 1])
             << " else";
      }
    }
    out_ << "\n    prev;\n";

    // Telecommands: accepted only from the source steady state.
    auto accepted = [&](const Transition& t) {
      return "(" + signal(t) + " and settled = " + literal(b, t.source()) + ")";
    };
    out_ << "  state =";
    for (const auto& t : b.transitions) out_ << "\n    if " << accepted(t) << " then " << literal(b, t.path[1]) << " else";
    out_ << "\n    settled;\n";

    out_ << "  timer =";
    for (const auto& t : b.transitions) out_ << "\n    if " << accepted(t) << " then " << duration(t, 0, true) << " else";
    for (const auto& t : b.transitions) {
      for (std::size_t i = 2; i + 1 < t.path.size(); ++i) {
        out_ << "\n    if expired and prev = " << literal(b, t.path[i - 1]) << " then " << duration(t, i - 1, false)
             << " else";
      }
    }
    out_ << "\n    if prev_timer > 0 then prev_timer - 1 else 0;\n";

    out_ << "  error =";
    if (b.transitions.empty()) {
      out_ << " false;\n";
    } else {
      for (const auto& t : b.transitions) {
        out_ << "\n    (" << signal(t) << " and not (settled = " << literal(b, t.source()) << ")) or";
      }
      std::vector<std::string> counts;
      for (const auto& t : b.transitions) counts.push_back("(if " + signal(t) + " then 1 else 0)");
      out_ << "\n    (" << join(counts, " + ") << " > 1);\n";
    }
    out_ << "tel\n";
    program_.nodes.push_back(std::move(node));
  }

  std::string condition_flow(const Condition& c) const {
    std::vector<std::string> terms;
    for (const auto& a : c.atoms) terms.push_back("st_" + a.block + " = " + a.block + "_" + a.state);
    return join(terms, " and ");
  }

  void emit_controller() {
    Scope scope("node OBSW", &globals_);
    SyncNode node;
    node.name = "OBSW";
    std::vector<std::string> locals;
    for (const auto& b : model_.blocks) {
      for (const auto& t : b.transitions) node.inputs.push_back(scope.declare(signal(t)) + ": bool");
      for (const auto& t : b.transitions) {
        if (t.is_delta()) node.inputs.push_back(scope.declare(delta_input(t)) + ": int");
      }
    }
    for (const auto& b : model_.blocks) node.outputs.push_back(scope.declare("st_" + b.name) + ": " + type_name(b));
    node.outputs.push_back(scope.declare("global_error") + ": bool");

    std::vector<std::string> instances;
    std::vector<std::string> checks;
    std::vector<std::string> failures;
    for (const auto& b : model_.blocks) {
      locals.push_back(scope.declare("err_" + b.name) + ": bool");
      std::vector<std::string> args;
      for (const auto& t : b.transitions) args.push_back(signal(t));
      for (const auto& t : b.transitions) {
        if (t.is_delta()) args.push_back(delta_input(t));
      }
      instances.push_back("(st_" + b.name + ", err_" + b.name + ") = " + b.name + "(" + join(args, ", ") + ");");
      failures.push_back("err_" + b.name);
    }
    for (const auto& b : model_.blocks) {
      for (std::size_t i = 0; i < b.guards.size(); ++i) {
        const Guard& g = b.guards[i];
        const std::string name = scope.declare("guard_" + lower(g.tc) + "_" + std::to_string(i));
        locals.push_back(name + ": bool");
        checks.push_back("-- guard (" + g.tc + ") " + to_string(g.condition));
        checks.push_back(name + " = not " + lower(g.tc) + " or (" + condition_flow(g.condition) + ");");
        failures.push_back("not " + name);
      }
      for (std::size_t i = 0; i < b.invariants.size(); ++i) {
        const StateInvariant& inv = b.invariants[i];
        const std::string name = scope.declare("inv_" + b.name + "_" + inv.state + "_" + std::to_string(i));
        locals.push_back(name + ": bool");
        checks.push_back("-- inv " + b.name + "." + inv.state + " " + to_string(inv.condition));
        checks.push_back(name + " = not (st_" + b.name + " = " + literal(b, inv.state) + ") or (" +
                         condition_flow(inv.condition) + ");");
        failures.push_back("not " + name);
      }
    }

    out_ << "\n-- Controller: composes every block, checks guards and invariants.\n";
    out_ << "node OBSW(" << join(node.inputs, "; ") << ")\n";
    out_ << "returns (" << join(node.outputs, "; ") << ");\n";
    if (!failures.empty()) {
      locals.push_back(scope.declare("raw_error") + ": bool");
      out_ << "var\n";
      for (const auto& l : locals) out_ << "  " << l << ";\n";
    }
    out_ << "let\n";
    for (const auto& i : instances) out_ << "  " << i << '\n';
    for (const auto& c : checks) out_ << "  " << c << '\n';
    if (failures.empty()) {
      out_ << "  global_error = false;\n";
    } else {
      out_ << "  raw_error =\n    " << join(failures, " or\n    ") << ";\n";
      out_ << "  -- failures are permanent\n";
      out_ << "  global_error = raw_error -> (pre(global_error) or raw_error);\n";
    }
    out_ << "tel\n";
    program_.nodes.push_back(std::move(node));
  }

  const Model& model_;
  Scope globals_{"the program"};
  SyncProgram program_;
  std::ostringstream out_;
};

}  // namespace

SyncProgram emit_sync_program(const Model& model) { return LustreWriter(model).run(); }

}  // namespace csm

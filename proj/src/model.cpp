#include "csm/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace csm {

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

void push_unique(std::vector<std::string>& v, const std::string& s) {
  if (!contains(v, s)) v.push_back(s);
}

}  // namespace

std::string to_string(const Condition& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.atoms.size(); ++i) {
    if (i > 0) out += ", ";
    out += c.atoms[i].block + ":" + c.atoms[i].state;
  }
  return out + "]";
}

std::string to_string(const DurationTerm& d) {
  return d.is_literal() ? std::to_string(d.literal()) : d.name();
}

bool Block::is_steady(const std::string& state) const { return contains(steady_states, state); }

bool Block::is_transient(const std::string& state) const { return contains(transient_states, state); }

std::vector<std::string> Block::states_in_order() const {
  std::vector<std::string> out;
  push_unique(out, initial);
  for (const auto& t : transitions) {
    for (const auto& s : t.path) push_unique(out, s);
  }
  return out;
}

void classify_states(Block& block) {
  block.steady_states.clear();
  block.transient_states.clear();
  push_unique(block.steady_states, block.initial);
  for (const auto& t : block.transitions) {
    if (t.path.empty()) continue;
    for (std::size_t i = 0; i < t.path.size(); ++i) {
      const bool endpoint = i == 0 || i + 1 == t.path.size();
      push_unique(endpoint ? block.steady_states : block.transient_states, t.path[i]);
    }
  }
}

const ConstDecl* Model::find_const(const std::string& name) const {
  for (const auto& c : consts) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const Block* Model::find_block(const std::string& name) const {
  for (const auto& b : blocks) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

std::vector<Guard> Model::guards() const {
  std::vector<Guard> out;
  for (const auto& b : blocks) out.insert(out.end(), b.guards.begin(), b.guards.end());
  return out;
}

std::vector<StateInvariant> Model::invariants() const {
  std::vector<StateInvariant> out;
  for (const auto& b : blocks) out.insert(out.end(), b.invariants.begin(), b.invariants.end());
  return out;
}

std::optional<TcLookup> lookup_tc(const Model& model, const std::string& tc) {
  for (const auto& b : model.blocks) {
    for (const auto& t : b.transitions) {
      if (t.tc == tc) return TcLookup{&b, &t};
    }
  }
  return std::nullopt;
}

Tick total_duration(const Model& model, const Transition& t, std::optional<std::uint64_t> delta) {
  if (t.is_delta() && !delta) throw std::invalid_argument(t.tc + " requires a delta parameter");
  if (!t.is_delta() && delta) throw std::invalid_argument(t.tc + " takes no delta parameter");
  if (delta && *delta == 0) throw std::invalid_argument(t.tc + ": delta must be at least 1");

  Tick total = 0;
  for (const auto& term : t.durations) {
    Tick value = 0;
    if (term.is_literal()) {
      value = term.literal();
    } else if (t.is_delta() && term.name() == *t.delta_param) {
      value = *delta;
    } else if (const auto* c = model.find_const(term.name())) {
      value = c->value;
    } else {
      throw std::invalid_argument("unresolved duration " + term.name() + " in " + t.tc);
    }
    if (value > kMaxTick - total) throw std::overflow_error("duration of " + t.tc + " overflows");
    total += value;
  }
  return total;
}

ModelSummary summarize(const Model& model) {
  ModelSummary s;
  s.blocks = model.blocks.size();
  for (const auto& b : model.blocks) {
    for (const auto& t : b.transitions) (t.is_delta() ? s.delta_tcs : s.fixed_tcs)++;
    s.guards += b.guards.size();
    s.invariants += b.invariants.size();
  }
  return s;
}

std::string to_string(const ModelSummary& s) {
  auto plural = [](std::size_t n, const char* word) {
    return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
  };
  return plural(s.blocks, "block") + ", " + std::to_string(s.fixed_tcs) + " TCs+" + std::to_string(s.delta_tcs) +
         " TCD, " + plural(s.guards, "guard") + ", " + plural(s.invariants, "invariant");
}

}  // namespace csm

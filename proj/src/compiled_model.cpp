#include "compiled_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace csm::detail {

namespace {

std::string names_of(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

}  // namespace

CompiledModel::CompiledModel(const Model& model) {
  for (const auto& b : model.blocks) {
    block_index_.emplace(b.name, static_cast<std::uint32_t>(blocks_.size()));
    CompiledBlock cb;
    cb.name = b.name;
    for (const auto& s : b.states_in_order()) {
      cb.state_index.emplace(s, static_cast<std::uint32_t>(cb.states.size()));
      cb.states.push_back(StateInfo{s, b.is_transient(s) && !b.is_steady(s), 0, 0, {}});
    }
    cb.initial = cb.state_index.at(b.initial);
    blocks_.push_back(std::move(cb));
  }

  auto compile_condition = [&](const Condition& c) {
    CompiledCondition out;
    out.source = c;
    for (const auto& atom : c.atoms) {
      auto bi = block_index_.find(atom.block);
      if (bi == block_index_.end()) throw std::invalid_argument("unresolved atom " + atom.block + ":" + atom.state);
      const auto& states = blocks_[bi->second].state_index;
      auto si = states.find(atom.state);
      if (si == states.end()) throw std::invalid_argument("unresolved atom " + atom.block + ":" + atom.state);
      out.atoms.push_back(Atom{bi->second, si->second});
    }
    return out;
  };

  for (std::uint32_t bi = 0; bi < model.blocks.size(); ++bi) {
    const Block& b = model.blocks[bi];
    CompiledBlock& cb = blocks_[bi];
    for (const auto& t : b.transitions) {
      const auto ti = static_cast<std::uint32_t>(transitions_.size());
      if (!tc_index_.emplace(t.tc, ti).second) throw std::invalid_argument("duplicate telecommand " + t.tc);
      if (t.path.size() < 3 || t.durations.size() != t.path.size() - 2) {
        throw std::invalid_argument("malformed transition " + t.tc);
      }
      CompiledTransition ct;
      ct.tc = t.tc;
      ct.block = bi;
      ct.delta = t.is_delta();
      for (std::uint32_t pos = 0; pos < t.path.size(); ++pos) {
        const std::uint32_t s = cb.state_index.at(t.path[pos]);
        ct.path.push_back(s);
        if (pos > 0 && pos + 1 < t.path.size()) {
          cb.states[s].transition = ti;
          cb.states[s].position = pos;
        }
      }
      for (const auto& term : t.durations) {
        DurationSlot slot;
        if (term.is_literal()) {
          slot.value = term.literal();
        } else if (t.is_delta() && term.name() == *t.delta_param) {
          slot.is_param = true;
        } else if (const auto* c = model.find_const(term.name())) {
          slot.value = c->value;
        } else {
          throw std::invalid_argument("unresolved duration " + term.name());
        }
        ct.durations.push_back(slot);
      }
      if (!ct.delta) ct.fixed_total = total_duration(model, t);
      for (const auto& g : b.guards) {
        if (g.tc == t.tc) ct.guards.push_back(compile_condition(g.condition));
      }
      transitions_.push_back(std::move(ct));
    }
    for (const auto& inv : b.invariants) {
      cb.states.at(cb.state_index.at(inv.state)).invariants.push_back(compile_condition(inv.condition));
    }
  }
}

RunState CompiledModel::initial() const {
  RunState s;
  s.states.reserve(blocks_.size());
  for (const auto& b : blocks_) s.states.push_back(b.initial);
  s.timers.resize(blocks_.size());
  return s;
}

RunState CompiledModel::from_public(const Configuration& config, bool require_invariants) const {
  if (config.now > kMaxTick) throw ConfigError("configuration date exceeds the maximum tick");
  RunState s = initial();
  s.now = config.now;
  for (const auto& [name, state] : config.block_states) {
    auto bi = block_index_.find(name);
    if (bi == block_index_.end()) throw ConfigError("unknown block " + name);
    const auto& states = blocks_[bi->second].state_index;
    auto si = states.find(state);
    if (si == states.end()) throw ConfigError("block " + name + " has no state " + state);
    s.states[bi->second] = si->second;
  }
  for (const auto& b : blocks_) {
    if (!config.block_states.contains(b.name)) throw ConfigError("no state given for block " + b.name);
  }

  for (const auto& timer : config.timers) {
    auto bi = block_index_.find(timer.block);
    if (bi == block_index_.end()) throw ConfigError("timer for unknown block " + timer.block);
    const std::uint32_t b = bi->second;
    if (s.timers[b]) throw ConfigError("two timers for block " + timer.block);
    const StateInfo& info = blocks_[b].states[s.states[b]];
    if (!info.transient) throw ConfigError("timer for block " + timer.block + " in steady state " + info.name);
    if (timer.fires_at < config.now) throw ConfigError("timer of " + timer.block + " expired before the configuration date");
    if (timer.fires_at > kMaxTick) throw ConfigError("timer of " + timer.block + " exceeds the maximum tick");

    const CompiledTransition& t = transitions_[info.transition];
    std::vector<std::string> expected;
    for (std::size_t p = info.position + 1; p < t.path.size(); ++p) expected.push_back(blocks_[b].states[t.path[p]].name);
    if (timer.continuation != expected) {
      throw ConfigError("timer continuation of " + timer.block + " must be " + names_of(expected));
    }
    if (timer.durations.size() + 1 != expected.size()) {
      throw ConfigError("timer of " + timer.block + " needs " + std::to_string(expected.size() - 1) + " duration(s)");
    }
    std::optional<Tick> delta;
    for (std::size_t k = 0; k < timer.durations.size(); ++k) {
      const DurationSlot& slot = t.durations[info.position + k];  // lifespan of path[position + 1 + k]
      const Tick given = timer.durations[k];
      if (slot.is_param) {
        if (given == 0 || (delta && *delta != given)) throw ConfigError("inconsistent delta in timer of " + timer.block);
        delta = given;
      } else if (given != slot.value) {
        throw ConfigError("timer of " + timer.block + " has duration " + std::to_string(given) + ", expected " +
                          std::to_string(slot.value));
      }
    }
    s.timers[b] = RunTimer{timer.fires_at, info.transition, info.position, delta.value_or(0)};
    ++s.active_timers;
  }
  for (std::uint32_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].states[s.states[b]].transient && !s.timers[b]) {
      throw ConfigError("block " + blocks_[b].name + " is in a transient state without a timer");
    }
  }
  if (!require_invariants) return s;
  if (auto violation = check_invariants(s, s.now)) {
    throw ConfigError("configuration violates invariant " + to_string(*violation->condition) + " of " +
                      *violation->block + "." + *violation->state);
  }
  return s;
}

Configuration CompiledModel::to_public(const RunState& s) const {
  Configuration c;
  c.now = s.now;
  for (std::uint32_t b = 0; b < blocks_.size(); ++b) {
    c.block_states.emplace(blocks_[b].name, blocks_[b].states[s.states[b]].name);
    if (!s.timers[b]) continue;
    const RunTimer& rt = *s.timers[b];
    const CompiledTransition& t = transitions_[rt.transition];
    Timer timer;
    timer.block = blocks_[b].name;
    timer.fires_at = rt.fires_at;
    for (std::size_t p = rt.position + 1; p < t.path.size(); ++p) {
      timer.continuation.push_back(blocks_[b].states[t.path[p]].name);
      if (p + 1 < t.path.size()) timer.durations.push_back(slot_value(t, static_cast<std::uint32_t>(p), rt.delta));
    }
    c.timers.push_back(std::move(timer));
  }
  std::sort(c.timers.begin(), c.timers.end(), [](const Timer& a, const Timer& b) { return a.block < b.block; });
  return c;
}

bool CompiledModel::holds(const CompiledCondition& c, const std::vector<std::uint32_t>& states) const {
  return std::all_of(c.atoms.begin(), c.atoms.end(), [&](const Atom& a) { return states[a.block] == a.state; });
}

Tick CompiledModel::slot_value(const CompiledTransition& t, std::uint32_t position, Tick delta) const {
  const DurationSlot& slot = t.durations[position - 1];
  return slot.is_param ? delta : slot.value;
}

std::optional<RejectionCause> CompiledModel::arm(RunState& s, std::uint32_t block, std::uint32_t transition,
                                                 std::uint32_t position, Tick delta, Tick tick,
                                                 const std::string* tc) const {
  const Tick d = slot_value(transitions_[transition], position, delta);
  if (d > kMaxTick - tick) {
    RejectionCause cause;
    cause.kind = RejectionKind::TickOverflow;
    cause.tick = tick;
    if (tc != nullptr) cause.tc = *tc;
    cause.block = blocks_[block].name;
    cause.detail = "timeout of " + blocks_[block].name + "." + blocks_[block].states[transitions_[transition].path[position]].name +
                   " overflows the maximum tick";
    return cause;
  }
  if (!s.timers[block]) ++s.active_timers;
  s.timers[block] = RunTimer{tick + d, transition, position, delta};
  return std::nullopt;
}

std::optional<RejectionCause> CompiledModel::fire(RunState& s, std::uint32_t block, Tick tick, Trace* trace) const {
  const RunTimer rt = *s.timers[block];
  const CompiledTransition& t = transitions_[rt.transition];
  const std::uint32_t next = rt.position + 1;
  s.states[block] = t.path[next];
  if (trace != nullptr) trace->push_back(TraceEntry{tick, blocks_[block].name, blocks_[block].states[t.path[next]].name});
  if (next + 1 == t.path.size()) {
    s.timers[block].reset();
    --s.active_timers;
    return std::nullopt;
  }
  return arm(s, block, rt.transition, next, rt.delta, tick, nullptr);
}

std::optional<RejectionCause> CompiledModel::dispatch(RunState& s, const TimedTelecommand& tc, Tick tick,
                                                      Trace* trace) const {
  RejectionCause cause;
  cause.tick = tick;
  cause.tc = tc.name;

  auto it = tc_index_.find(tc.name);
  if (it == tc_index_.end()) {
    cause.kind = RejectionKind::UnknownTc;
    cause.detail = "unknown telecommand " + tc.name;
    return cause;
  }
  const CompiledTransition& t = transitions_[it->second];
  const CompiledBlock& b = blocks_[t.block];
  cause.block = b.name;

  if (t.delta && (!tc.delta || *tc.delta == 0)) {
    cause.kind = RejectionKind::DeltaArityError;
    cause.detail = tc.name + (tc.delta ? " needs a delta of at least 1" : " requires a delta parameter");
    return cause;
  }
  if (!t.delta && tc.delta && *tc.delta != t.fixed_total) {
    cause.kind = RejectionKind::DurationMismatch;
    cause.detail = tc.name + " delta=" + std::to_string(*tc.delta) + " does not match its duration " +
                   std::to_string(t.fixed_total);
    return cause;
  }
  const std::uint32_t current = s.states[t.block];
  if (current != t.path.front()) {
    cause.kind = RejectionKind::UnexpectedTc;
    cause.state = b.states[current].name;
    cause.detail = "unexpected " + tc.name + " in " + b.name + "." + b.states[current].name;
    return cause;
  }
  for (const auto& g : t.guards) {
    if (!holds(g, s.states)) {
      cause.kind = RejectionKind::GuardViolation;
      cause.condition = g.source;
      cause.detail = "guard " + to_string(g.source) + " of " + tc.name + " violated";
      return cause;
    }
  }

  const Tick delta = t.delta ? *tc.delta : 0;
  if (auto overflow = arm(s, t.block, it->second, 1, delta, tick, &tc.name)) return overflow;
  s.states[t.block] = t.path[1];
  if (trace != nullptr) trace->push_back(TraceEntry{tick, b.name, b.states[t.path[1]].name});
  return std::nullopt;
}

std::optional<RejectionCause> CompiledModel::check_invariants(const RunState& s, Tick tick) const {
  for (std::uint32_t b = 0; b < blocks_.size(); ++b) {
    const StateInfo& info = blocks_[b].states[s.states[b]];
    for (const auto& inv : info.invariants) {
      if (holds(inv, s.states)) continue;
      RejectionCause cause;
      cause.kind = RejectionKind::InvariantViolation;
      cause.tick = tick;
      cause.block = blocks_[b].name;
      cause.state = info.name;
      cause.condition = inv.source;
      cause.detail = "invariant " + to_string(inv.source) + " violated in " + blocks_[b].name + "." + info.name;
      return cause;
    }
  }
  return std::nullopt;
}

std::optional<RejectionCause> CompiledModel::check_dates(const TcSequence& seq, Tick start) const {
  Tick previous = start;
  for (const auto& tc : seq) {
    if (tc.t < previous || tc.t > kMaxTick) {
      RejectionCause cause;
      cause.kind = RejectionKind::NonMonotonicDates;
      cause.tick = start;
      cause.tc = tc.name;
      cause.detail = tc.name + " t=" + std::to_string(tc.t) +
                     (tc.t > kMaxTick ? " exceeds the maximum tick" : " is dated before t=" + std::to_string(previous));
      return cause;
    }
    previous = tc.t;
  }
  return std::nullopt;
}

Verdict make_rejected(const CompiledModel& m, RejectionCause cause, const RunState& last_safe, Trace trace) {
  Verdict v;
  v.accepted = false;
  v.cause = std::move(cause);
  v.last_safe = m.to_public(last_safe);
  v.trace = std::move(trace);
  return v;
}

Verdict make_accepted(const CompiledModel& m, const RunState& final_state, Tick start, Trace trace) {
  Verdict v;
  v.accepted = true;
  v.final = m.to_public(final_state);
  v.last_safe = *v.final;
  v.quiescent_at = final_state.now > start ? final_state.now - 1 : start;
  v.trace = std::move(trace);
  return v;
}

}  // namespace csm::detail

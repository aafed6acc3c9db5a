#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "csm/interp.hpp"

namespace csm::detail {

struct Atom {
  std::uint32_t block = 0;
  std::uint32_t state = 0;
};

struct CompiledCondition {
  std::vector<Atom> atoms;
  Condition source;
};

struct DurationSlot {
  Tick value = 0;
  bool is_param = false;
};

struct CompiledTransition {
  std::string tc;
  std::uint32_t block = 0;
  std::vector<std::uint32_t> path;
  // durations[i] is the lifespan of path[i + 1].
  std::vector<DurationSlot> durations;
  bool delta = false;
  Tick fixed_total = 0;  // only for fixed transitions
  std::vector<CompiledCondition> guards;
};

struct StateInfo {
  std::string name;
  bool transient = false;
  // Transient states only: owning transition and index in its path.
  std::uint32_t transition = 0;
  std::uint32_t position = 0;
  std::vector<CompiledCondition> invariants;
};

struct CompiledBlock {
  std::string name;
  std::uint32_t initial = 0;
  std::vector<StateInfo> states;
  std::unordered_map<std::string, std::uint32_t> state_index;
};

struct RunTimer {
  Tick fires_at = 0;
  std::uint32_t transition = 0;
  std::uint32_t position = 0;
  Tick delta = 0;
};

/// Index-based configuration used while running.
struct RunState {
  Tick now = 0;
  std::vector<std::uint32_t> states;
  std::vector<std::optional<RunTimer>> timers;
  std::size_t active_timers = 0;
};

using Trace = std::vector<TraceEntry>;

class CompiledModel {
 public:
  explicit CompiledModel(const Model& model);

  std::size_t block_count() const { return blocks_.size(); }
  const CompiledBlock& block(std::uint32_t b) const { return blocks_[b]; }
  const CompiledTransition& transition(std::uint32_t t) const { return transitions_[t]; }
  std::optional<std::uint32_t> owner(const std::string& tc) const {
    auto it = tc_index_.find(tc);
    if (it == tc_index_.end()) return std::nullopt;
    return transitions_[it->second].block;
  }

  RunState initial() const;
  RunState from_public(const Configuration& config, bool require_invariants = true) const;  // throws ConfigError
  Configuration to_public(const RunState& s) const;

  /// Phase 1 for one block whose timer is due at `tick`.
  std::optional<RejectionCause> fire(RunState& s, std::uint32_t block, Tick tick, Trace* trace) const;
  /// Phase 2 for one TC at `tick`.
  std::optional<RejectionCause> dispatch(RunState& s, const TimedTelecommand& tc, Tick tick, Trace* trace) const;
  /// Phase 3: first violated invariant, blocks in declaration order.
  std::optional<RejectionCause> check_invariants(const RunState& s, Tick tick) const;

  /// NonMonotonicDates when dates decrease or precede `start`.
  std::optional<RejectionCause> check_dates(const TcSequence& seq, Tick start) const;

 private:
  bool holds(const CompiledCondition& c, const std::vector<std::uint32_t>& states) const;
  Tick slot_value(const CompiledTransition& t, std::uint32_t position, Tick delta) const;
  std::optional<RejectionCause> arm(RunState& s, std::uint32_t block, std::uint32_t transition,
                                    std::uint32_t position, Tick delta, Tick tick, const std::string* tc) const;

  std::vector<CompiledBlock> blocks_;
  std::vector<CompiledTransition> transitions_;
  std::unordered_map<std::string, std::uint32_t> tc_index_;
  std::unordered_map<std::string, std::uint32_t> block_index_;
};

Verdict run_cycle(const CompiledModel& m, const RunState& start, const TcSequence& seq, const VerifyOptions& opts);
Verdict run_event(const CompiledModel& m, const RunState& start, const TcSequence& seq, const VerifyOptions& opts);

/// Shared verdict assembly so both engines report identically.
Verdict make_rejected(const CompiledModel& m, RejectionCause cause, const RunState& last_safe, Trace trace);
Verdict make_accepted(const CompiledModel& m, const RunState& final_state, Tick start, Trace trace);

}  // namespace csm::detail

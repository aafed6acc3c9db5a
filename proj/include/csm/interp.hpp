#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "csm/model.hpp"

namespace csm {

struct TimedTelecommand {
  std::string name;
  Tick t = 0;
  std::optional<std::uint64_t> delta;

  bool operator==(const TimedTelecommand&) const = default;
};

/// A timed word: dates non-decreasing, equal-date order is dispatch order.
using TcSequence = std::vector<TimedTelecommand>;

/// Pending timeout of a block sitting in a transient state.
struct Timer {
  std::string block;
  Tick fires_at = 0;
  // States still to visit after the current one, ending in the destination.
  std::vector<std::string> continuation;
  // Durations of the transient states in `continuation`, delta substituted.
  std::vector<Tick> durations;

  bool operator==(const Timer&) const = default;
};

/// Snapshot of the whole system at the start of tick `now`, equivalently at
/// the end of tick `now - 1`.
struct Configuration {
  Tick now = 0;
  std::map<std::string, std::string> block_states;
  std::vector<Timer> timers;  // sorted by block name, at most one per block

  bool quiescent() const { return timers.empty(); }
  bool operator==(const Configuration&) const = default;
};

enum class RejectionKind {
  UnknownTc,
  UnexpectedTc,
  GuardViolation,
  InvariantViolation,
  DeltaArityError,
  NonMonotonicDates,
  DurationMismatch,
  TickOverflow,
};

const char* to_string(RejectionKind kind);
std::optional<RejectionKind> rejection_kind_from_string(const std::string& s);

/// Why a sequence was rejected. Fields populated per kind:
///
///   kind                tc  block  state  condition
///   UnknownTc           x
///   UnexpectedTc        x   x      x (current state)
///   GuardViolation      x   x             x
///   InvariantViolation      x      x      x
///   DeltaArityError     x   x
///   DurationMismatch    x   x
///   NonMonotonicDates   x
///   TickOverflow        x*  x             (* when raised by a dispatch)
struct RejectionCause {
  RejectionKind kind = RejectionKind::UnknownTc;
  Tick tick = 0;
  std::optional<std::string> tc;
  std::optional<std::string> block;
  std::optional<std::string> state;
  std::optional<Condition> condition;
  std::string detail;

  bool operator==(const RejectionCause&) const = default;
};

/// One line of "tick 5: invariant [MEMORY:ON] violated in ERASE.CLEAR".
std::string describe(const RejectionCause& cause);

struct TraceEntry {
  Tick tick = 0;
  std::string block;
  std::string state;

  bool operator==(const TraceEntry&) const = default;
};

struct Verdict {
  bool accepted = false;
  std::optional<RejectionCause> cause;
  // Rejected: configuration at the start of cause->tick. Accepted: == final.
  Configuration last_safe;
  std::optional<Configuration> final;
  // Accepted only: the tick at whose end the system was last seen busy, or
  // the start tick when nothing had to be simulated.
  std::optional<Tick> quiescent_at;
  std::vector<TraceEntry> trace;

  bool operator==(const Verdict&) const = default;
};

enum class EngineKind { Cycle, Event };

struct VerifyOptions {
  bool record_trace = false;
};

/// Start configuration that does not fit the model.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using StepResult = std::variant<Configuration, RejectionCause>;

namespace detail {
class CompiledModel;
}

/// Executes the timed-word semantics of a validated model. Each tick runs
/// three phases: (1) expired timers fire, (2) TCs dated at the tick are
/// dispatched in sequence order, (3) state invariants are checked.
///
/// Holds a compiled copy of the model; cheap to share across threads.
class Interpreter {
 public:
  explicit Interpreter(const Model& model);
  ~Interpreter();
  Interpreter(const Interpreter&);
  Interpreter& operator=(const Interpreter&);
  Interpreter(Interpreter&&) noexcept;
  Interpreter& operator=(Interpreter&&) noexcept;

  Configuration initial_configuration() const;

  /// Phase 1 only. Idempotent within a tick.
  StepResult fire_timers(const Configuration& config) const;
  /// Phase 2 for one TC. Requires config.now == tc.t and phase 1 applied.
  StepResult dispatch_tc(const Configuration& config, const TimedTelecommand& tc) const;
  /// Phase 3, then now + 1.
  StepResult close_tick(const Configuration& config) const;
  /// A whole tick without TCs.
  StepResult step_tick(const Configuration& config) const;

  Verdict verify(const TcSequence& seq, VerifyOptions opts = {}) const;
  Verdict verify_event(const TcSequence& seq, VerifyOptions opts = {}) const;
  /// Throws ConfigError when `start` is inconsistent with the model.
  Verdict verify_from(const Configuration& start, const TcSequence& seq, EngineKind engine = EngineKind::Cycle,
                      VerifyOptions opts = {}) const;

  /// Throws ConfigError when `config` is inconsistent with the model.
  void check_configuration(const Configuration& config) const;

 private:
  std::unique_ptr<detail::CompiledModel> compiled_;
};

Configuration initial_configuration(const Model& model);
StepResult step_tick(const Model& model, const Configuration& config);
StepResult dispatch_tc(const Model& model, const Configuration& config, const TimedTelecommand& tc);

/// Cycle-accurate engine: simulates every tick.
Verdict verify(const Model& model, const TcSequence& seq, VerifyOptions opts = {});
/// Discrete-event engine: jumps between TC dates and timer expiries. Same
/// observable result as verify().
Verdict verify_event(const Model& model, const TcSequence& seq, VerifyOptions opts = {});
Verdict verify_from(const Model& model, const Configuration& start, const TcSequence& seq,
                    EngineKind engine = EngineKind::Cycle, VerifyOptions opts = {});

}  // namespace csm

#include <queue>
#include <tuple>

#include "compiled_model.hpp"

namespace csm::detail {

namespace {

// Within one instant: timeouts (by block), then TCs (by sequence order).
enum class Phase : std::uint8_t { Timeout = 0, Telecommand = 1 };

struct Event {
  Tick tick = 0;
  Phase phase = Phase::Timeout;
  std::size_t ordinal = 0;

  bool operator>(const Event& o) const {
    return std::tie(tick, phase, ordinal) > std::tie(o.tick, o.phase, o.ordinal);
  }
};

using EventQueue = std::priority_queue<Event, std::vector<Event>, std::greater<>>;

}  // namespace

// Visits only instants where a TC is dated or a timer expires. Block states
// are constant between two instants, so checking invariants once per instant
// reports the same first tick as checking every tick.
Verdict run_event(const CompiledModel& m, const RunState& start, const TcSequence& seq, const VerifyOptions& opts) {
  Trace trace;
  Trace* tr = opts.record_trace ? &trace : nullptr;
  if (auto bad = m.check_dates(seq, start.now)) return make_rejected(m, std::move(*bad), start, std::move(trace));

  EventQueue queue;
  for (std::size_t i = 0; i < seq.size(); ++i) queue.push(Event{seq[i].t, Phase::Telecommand, i});
  for (std::uint32_t b = 0; b < m.block_count(); ++b) {
    if (start.timers[b]) queue.push(Event{start.timers[b]->fires_at, Phase::Timeout, b});
  }

  RunState s = start;
  RunState safe;
  std::optional<Tick> instant;

  auto close_instant = [&]() -> std::optional<RejectionCause> {
    if (auto cause = m.check_invariants(s, *instant)) return cause;
    s.now = *instant + 1;
    instant.reset();
    return std::nullopt;
  };

  while (!queue.empty()) {
    const Event ev = queue.top();
    if (instant && ev.tick != *instant) {
      if (auto cause = close_instant()) return make_rejected(m, std::move(*cause), safe, std::move(trace));
    }
    if (!instant) {
      instant = ev.tick;
      s.now = ev.tick;
      safe = s;
    }
    queue.pop();

    std::uint32_t armed_block = 0;
    std::optional<RejectionCause> cause;
    if (ev.phase == Phase::Timeout) {
      armed_block = static_cast<std::uint32_t>(ev.ordinal);
      cause = m.fire(s, armed_block, ev.tick, tr);
    } else {
      const TimedTelecommand& tc = seq[ev.ordinal];
      cause = m.dispatch(s, tc, ev.tick, tr);
      if (!cause) armed_block = *m.owner(tc.name);
    }
    if (cause) return make_rejected(m, std::move(*cause), safe, std::move(trace));
    if (s.timers[armed_block] && s.timers[armed_block]->fires_at > ev.tick) {
      queue.push(Event{s.timers[armed_block]->fires_at, Phase::Timeout, armed_block});
    }
  }
  if (instant) {
    if (auto cause = close_instant()) return make_rejected(m, std::move(*cause), safe, std::move(trace));
  }
  return make_accepted(m, s, start.now, std::move(trace));
}

}  // namespace csm::detail

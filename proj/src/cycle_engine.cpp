#include "compiled_model.hpp"

namespace csm::detail {

// Simulates every tick from start.now until the sequence is consumed and no
// timer is pending.
Verdict run_cycle(const CompiledModel& m, const RunState& start, const TcSequence& seq, const VerifyOptions& opts) {
  Trace trace;
  Trace* tr = opts.record_trace ? &trace : nullptr;
  if (auto bad = m.check_dates(seq, start.now)) return make_rejected(m, std::move(*bad), start, std::move(trace));

  RunState s = start;
  RunState safe;
  std::size_t next = 0;
  const auto blocks = static_cast<std::uint32_t>(m.block_count());

  while (next < seq.size() || s.active_timers > 0) {
    const Tick tick = s.now;
    safe = s;

    for (std::uint32_t b = 0; b < blocks && s.active_timers > 0; ++b) {
      if (s.timers[b] && s.timers[b]->fires_at == tick) {
        if (auto cause = m.fire(s, b, tick, tr)) return make_rejected(m, std::move(*cause), safe, std::move(trace));
      }
    }
    for (; next < seq.size() && seq[next].t == tick; ++next) {
      if (auto cause = m.dispatch(s, seq[next], tick, tr)) return make_rejected(m, std::move(*cause), safe, std::move(trace));
    }
    if (auto cause = m.check_invariants(s, tick)) return make_rejected(m, std::move(*cause), safe, std::move(trace));

    s.now = tick + 1;
  }
  return make_accepted(m, s, start.now, std::move(trace));
}

}  // namespace csm::detail

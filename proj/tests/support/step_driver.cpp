#include "step_driver.hpp"

namespace csm::test {

namespace {

Verdict reject(const RejectionCause& cause, const Configuration& safe) {
  Verdict v;
  v.cause = cause;
  v.last_safe = safe;
  return v;
}

}  // namespace

Verdict drive(const Interpreter& interp, const Configuration& start, const TcSequence& seq, const PhaseHook& hook,
              std::map<Tick, Configuration>* starts) {
  Tick previous = start.now;
  for (const auto& tc : seq) {
    if (tc.t < previous || tc.t > kMaxTick) {
      RejectionCause cause;
      cause.kind = RejectionKind::NonMonotonicDates;
      cause.tick = start.now;
      cause.tc = tc.name;
      cause.detail = tc.name + " t=" + std::to_string(tc.t) +
                     (tc.t > kMaxTick ? " exceeds the maximum tick" : " is dated before t=" + std::to_string(previous));
      return reject(cause, start);
    }
    previous = tc.t;
  }

  Configuration c = start;
  std::size_t next = 0;
  while (next < seq.size() || !c.quiescent()) {
    if (starts != nullptr) (*starts)[c.now] = c;
    const Configuration safe = c;
    StepResult r = interp.fire_timers(c);
    if (auto* cause = std::get_if<RejectionCause>(&r)) return reject(*cause, safe);
    c = std::get<Configuration>(r);
    if (hook) hook("fire", c);
    for (; next < seq.size() && seq[next].t == c.now; ++next) {
      r = interp.dispatch_tc(c, seq[next]);
      if (auto* cause = std::get_if<RejectionCause>(&r)) return reject(*cause, safe);
      c = std::get<Configuration>(r);
      if (hook) hook("dispatch", c);
    }
    r = interp.close_tick(c);
    if (auto* cause = std::get_if<RejectionCause>(&r)) return reject(*cause, safe);
    c = std::get<Configuration>(r);
    if (hook) hook("close", c);
  }
  Verdict v;
  v.accepted = true;
  v.final = c;
  v.last_safe = c;
  v.quiescent_at = c.now > start.now ? c.now - 1 : start.now;
  return v;
}

}  // namespace csm::test

#include "csm/interp.hpp"

#include <array>

#include "compiled_model.hpp"

namespace csm {

namespace {

constexpr std::array<std::pair<RejectionKind, const char*>, 8> kKindNames{{
    {RejectionKind::UnknownTc, "UnknownTc"},
    {RejectionKind::UnexpectedTc, "UnexpectedTc"},
    {RejectionKind::GuardViolation, "GuardViolation"},
    {RejectionKind::InvariantViolation, "InvariantViolation"},
    {RejectionKind::DeltaArityError, "DeltaArityError"},
    {RejectionKind::NonMonotonicDates, "NonMonotonicDates"},
    {RejectionKind::DurationMismatch, "DurationMismatch"},
    {RejectionKind::TickOverflow, "TickOverflow"},
}};

}  // namespace

const char* to_string(RejectionKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<RejectionKind> rejection_kind_from_string(const std::string& s) {
  for (const auto& [k, name] : kKindNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

std::string describe(const RejectionCause& cause) { return "tick " + std::to_string(cause.tick) + ": " + cause.detail; }

Interpreter::Interpreter(const Model& model) : compiled_(std::make_unique<detail::CompiledModel>(model)) {}
Interpreter::~Interpreter() = default;
Interpreter::Interpreter(const Interpreter& o) : compiled_(std::make_unique<detail::CompiledModel>(*o.compiled_)) {}
Interpreter& Interpreter::operator=(const Interpreter& o) {
  if (this != &o) compiled_ = std::make_unique<detail::CompiledModel>(*o.compiled_);
  return *this;
}
Interpreter::Interpreter(Interpreter&&) noexcept = default;
Interpreter& Interpreter::operator=(Interpreter&&) noexcept = default;

Configuration Interpreter::initial_configuration() const { return compiled_->to_public(compiled_->initial()); }

void Interpreter::check_configuration(const Configuration& config) const { (void)compiled_->from_public(config); }

// The single-phase operations work on mid-tick snapshots, which may violate
// invariants until phase 3 runs.
StepResult Interpreter::fire_timers(const Configuration& config) const {
  detail::RunState s = compiled_->from_public(config, false);
  for (std::uint32_t b = 0; b < compiled_->block_count(); ++b) {
    if (s.timers[b] && s.timers[b]->fires_at == s.now) {
      if (auto cause = compiled_->fire(s, b, s.now, nullptr)) return std::move(*cause);
    }
  }
  return compiled_->to_public(s);
}

StepResult Interpreter::dispatch_tc(const Configuration& config, const TimedTelecommand& tc) const {
  if (tc.t != config.now) throw std::invalid_argument("dispatch_tc: TC date differs from the configuration date");
  detail::RunState s = compiled_->from_public(config, false);
  if (auto cause = compiled_->dispatch(s, tc, s.now, nullptr)) return std::move(*cause);
  return compiled_->to_public(s);
}

StepResult Interpreter::close_tick(const Configuration& config) const {
  detail::RunState s = compiled_->from_public(config, /*require_invariants=*/false);
  if (auto cause = compiled_->check_invariants(s, s.now)) return std::move(*cause);
  s.now += 1;
  return compiled_->to_public(s);
}

StepResult Interpreter::step_tick(const Configuration& config) const {
  StepResult fired = fire_timers(config);
  if (std::holds_alternative<RejectionCause>(fired)) return fired;
  return close_tick(std::get<Configuration>(fired));
}

Verdict Interpreter::verify(const TcSequence& seq, VerifyOptions opts) const {
  return detail::run_cycle(*compiled_, compiled_->initial(), seq, opts);
}

Verdict Interpreter::verify_event(const TcSequence& seq, VerifyOptions opts) const {
  return detail::run_event(*compiled_, compiled_->initial(), seq, opts);
}

Verdict Interpreter::verify_from(const Configuration& start, const TcSequence& seq, EngineKind engine,
                                 VerifyOptions opts) const {
  const detail::RunState s = compiled_->from_public(start);
  return engine == EngineKind::Cycle ? detail::run_cycle(*compiled_, s, seq, opts)
                                     : detail::run_event(*compiled_, s, seq, opts);
}

Configuration initial_configuration(const Model& model) { return Interpreter(model).initial_configuration(); }

StepResult step_tick(const Model& model, const Configuration& config) { return Interpreter(model).step_tick(config); }

StepResult dispatch_tc(const Model& model, const Configuration& config, const TimedTelecommand& tc) {
  return Interpreter(model).dispatch_tc(config, tc);
}

Verdict verify(const Model& model, const TcSequence& seq, VerifyOptions opts) {
  return Interpreter(model).verify(seq, opts);
}

Verdict verify_event(const Model& model, const TcSequence& seq, VerifyOptions opts) {
  return Interpreter(model).verify_event(seq, opts);
}

Verdict verify_from(const Model& model, const Configuration& start, const TcSequence& seq, EngineKind engine,
                    VerifyOptions opts) {
  return Interpreter(model).verify_from(start, seq, engine, opts);
}

}  // namespace csm

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "csm/source.hpp"

namespace csm {

/// Controller cycles. Dates and durations never exceed kMaxTick.
using Tick = std::uint64_t;
inline constexpr Tick kMaxTick = 0x7fff'ffff'ffff'ffffULL;

struct ConstDecl {
  std::string name;
  std::uint64_t value = 0;
  SourceSpan span;

  bool operator==(const ConstDecl&) const = default;
};

/// `BLOCK:STATE` atom of a condition.
struct StateRef {
  std::string block;
  std::string state;
  SourceSpan span;

  bool operator==(const StateRef&) const = default;
};

/// Conjunction of atoms, written `[A:X, B:Y]`.
struct Condition {
  std::vector<StateRef> atoms;
  SourceSpan span;

  bool operator==(const Condition&) const = default;
};

std::string to_string(const Condition& c);

/// One entry of a transition's duration list: a constant name (or the delta
/// parameter of a `tcd`) or a natural literal.
struct DurationTerm {
  std::variant<std::string, std::uint64_t> value;
  SourceSpan span;

  bool is_literal() const { return std::holds_alternative<std::uint64_t>(value); }
  const std::string& name() const { return std::get<std::string>(value); }
  std::uint64_t literal() const { return std::get<std::uint64_t>(value); }

  bool operator==(const DurationTerm&) const = default;
};

std::string to_string(const DurationTerm& d);

/// A `tc` or `tcd` declaration: steady source, one or more transient states,
/// steady destination; one duration per transient state.
struct Transition {
  std::string tc;
  std::optional<std::string> delta_param;
  std::vector<std::string> path;
  std::vector<DurationTerm> durations;
  std::vector<std::string> requirement_tags;
  SourceSpan span;

  bool is_delta() const { return delta_param.has_value(); }
  const std::string& source() const { return path.front(); }
  const std::string& destination() const { return path.back(); }

  bool operator==(const Transition&) const = default;
};

struct Guard {
  std::string tc;
  Condition condition;
  SourceSpan span;

  bool operator==(const Guard&) const = default;
};

struct StateInvariant {
  std::string block;
  std::string state;
  Condition condition;
  SourceSpan span;

  bool operator==(const StateInvariant&) const = default;
};

/// One equipment or function. Guards and invariants are kept with the block
/// that declares them; validation requires they name that block's TCs/states.
struct Block {
  std::string name;
  std::string initial;
  SourceSpan initial_span;
  // First-appearance order; derived from `initial` and the transition paths.
  std::vector<std::string> steady_states;
  std::vector<std::string> transient_states;
  std::vector<Transition> transitions;
  std::vector<Guard> guards;
  std::vector<StateInvariant> invariants;
  std::vector<std::string> requirement_tags;
  SourceSpan span;

  bool is_steady(const std::string& state) const;
  bool is_transient(const std::string& state) const;
  bool has_state(const std::string& state) const { return is_steady(state) || is_transient(state); }
  /// All states, initial first, then in order of first appearance in paths.
  std::vector<std::string> states_in_order() const;

  bool operator==(const Block&) const = default;
};

/// Recomputes steady_states / transient_states from the declarations. A
/// state that is both an endpoint and interior lands in both lists; the
/// validator reports that.
void classify_states(Block& block);

struct Model {
  std::vector<ConstDecl> consts;
  std::vector<Block> blocks;

  const ConstDecl* find_const(const std::string& name) const;
  const Block* find_block(const std::string& name) const;

  std::vector<Guard> guards() const;
  std::vector<StateInvariant> invariants() const;

  bool operator==(const Model&) const = default;
};

struct TcLookup {
  const Block* block = nullptr;
  const Transition* transition = nullptr;
};

/// Finds the unique declaration of a TC.
std::optional<TcLookup> lookup_tc(const Model& model, const std::string& tc);

/// Ticks between dispatching `t` and reaching its destination steady state.
/// Throws std::invalid_argument when `delta` is missing for a `tcd`, given for
/// a `tc`, or zero; std::overflow_error when the sum exceeds kMaxTick.
Tick total_duration(const Model& model, const Transition& t, std::optional<std::uint64_t> delta = std::nullopt);

/// Counts reported by `csmc check`.
struct ModelSummary {
  std::size_t blocks = 0;
  std::size_t fixed_tcs = 0;
  std::size_t delta_tcs = 0;
  std::size_t guards = 0;
  std::size_t invariants = 0;
};

ModelSummary summarize(const Model& model);
std::string to_string(const ModelSummary& s);

}  // namespace csm

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "csm/interp.hpp"

namespace csm {

/// Synthetic telecommands (STCs): named templates that expand into a fixed,
/// time-tagged TC sequence.

struct StcStep {
  std::string tc;
  Tick offset = 0;  // ticks after the STC start
  std::optional<std::string> delta_source;  // STC parameter feeding a `tcd`
};

struct StcTemplate {
  std::string name;
  std::vector<std::string> parameters;
  std::vector<StcStep> steps;
};

struct StcRequest {
  std::string template_name;
  Tick t0 = 0;
  std::map<std::string, std::uint64_t> bindings;
};

/// An STC step the model cannot turn into a TC, or a malformed request.
class StcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a JSON template library:
///   [{"name": ..., "parameters": [...], "steps": [{"tc": ..., "offset": N, "delta_source": P?}]}]
/// Throws StcError on schema violations (unknown parameter, decreasing
/// offsets, empty step list, duplicate names).
std::vector<StcTemplate> parse_templates(std::string_view json_text);

/// Non-fatal findings: templates longer than 11 steps, TCs the model lacks.
std::vector<std::string> lint_templates(const Model& model, const std::vector<StcTemplate>& templates);

/// Expands a request into a date-sorted TC sequence. Fixed TCs carry their
/// total duration as delta so the verifier cross-checks it.
TcSequence expand_stc(const Model& model, const std::vector<StcTemplate>& templates, const StcRequest& request);

/// Stable date-ordered union; at equal dates `existing` comes first.
TcSequence merge_plans(const TcSequence& existing, const TcSequence& addition);

/// Admission gate for a plan about to run from `current`.
Verdict admit(const Model& model, const Configuration& current, const TcSequence& plan);

}  // namespace csm

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csm/model.hpp"

namespace csm {

/// Stable diagnostic codes. See docs/diagnostics.md.
namespace diag {
inline constexpr const char* kEmptyModel = "E000";
inline constexpr const char* kDuplicateConst = "E001";
inline constexpr const char* kZeroConst = "E002";
inline constexpr const char* kDuplicateBlock = "E003";
inline constexpr const char* kTransientInitial = "E004";
inline constexpr const char* kSteadyAndTransient = "E005";
inline constexpr const char* kSharedTransient = "E010";
inline constexpr const char* kDurationCount = "E011";
inline constexpr const char* kUnresolvedDuration = "E012";
inline constexpr const char* kZeroDuration = "E013";
inline constexpr const char* kUnresolvedAtom = "E020";
inline constexpr const char* kTransientAtom = "E021";
inline constexpr const char* kDuplicateAtom = "E022";
inline constexpr const char* kDuplicateTc = "E030";
inline constexpr const char* kUnusedDelta = "E040";
inline constexpr const char* kDeltaShadowsConst = "E041";
inline constexpr const char* kForeignTarget = "E050";
inline constexpr const char* kUnknownTarget = "E051";
inline constexpr const char* kInitialViolation = "E060";
}  // namespace diag

struct Diagnostic {
  std::string code;
  std::string message;
  SourceSpan span;
};

std::string to_string(const Diagnostic& d);

struct ValidationResult {
  std::optional<Model> model;
  std::vector<Diagnostic> diagnostics;

  explicit operator bool() const { return model.has_value(); }
};

/// Checks every structural rule of the language and returns either the
/// validated model or all diagnostics, sorted by source location.
ValidationResult validate_model(const Model& raw);

}  // namespace csm

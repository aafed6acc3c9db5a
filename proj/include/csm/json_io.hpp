#pragma once

#include <json.hpp>

#include "csm/enumerate.hpp"
#include "csm/interp.hpp"

namespace csm {

/// Version tag written into every verdict document.
inline constexpr const char* kVerdictSchema = "csm-verdict/1";
inline constexpr const char* kErrorSuiteSchema = "csm-error-suite/1";

nlohmann::json to_json(const Configuration& c);
nlohmann::json to_json(const RejectionCause& c);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const TcSequence& seq);
nlohmann::json to_json(const std::vector<MinimalError>& errors);

/// Reads the configuration object of a verdict (or a standalone file of the
/// same shape). Throws ConfigError on shape errors; model consistency is
/// checked separately by the interpreter.
Configuration configuration_from_json(const nlohmann::json& j);

}  // namespace csm

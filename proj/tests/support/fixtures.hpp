#pragma once

#include <string>

#include "csm/model.hpp"

namespace csm::test {

/// Absolute path of a file under the source tree.
std::string source_path(const std::string& relative);
std::string read_text(const std::string& path);

/// Parses and validates models/<name>; fails the calling test otherwise.
Model load_model(const std::string& name);

}  // namespace csm::test

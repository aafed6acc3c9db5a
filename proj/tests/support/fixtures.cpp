#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "csm/parser.hpp"
#include "csm/validate.hpp"

namespace csm::test {

std::string source_path(const std::string& relative) { return std::string(CSM_SOURCE_DIR) + "/" + relative; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Model load_model(const std::string& name) {
  const std::string path = source_path("models/" + name);
  ValidationResult r = validate_model(parse_csm(read_text(path), path));
  if (!r) {
    std::string msg = "invalid fixture " + name;
    for (const auto& d : r.diagnostics) msg += "\n" + to_string(d);
    throw std::runtime_error(msg);
  }
  return *r.model;
}

}  // namespace csm::test

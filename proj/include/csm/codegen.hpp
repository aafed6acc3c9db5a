#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "csm/model.hpp"

namespace csm {

/// Graphviz rendering: one `cluster_<block>` per block, steady states solid,
/// transient dashed, initial bold, TC edges solid, timeouts dotted.
struct GraphDoc {
  std::string text;
};

GraphDoc emit_graph(const Model& model);

/// Lustre program: one node per block plus the `OBSW` controller node.
struct SyncNode {
  std::string name;
  std::vector<std::string> inputs;   // "name: type"
  std::vector<std::string> outputs;  // "name: type"
};

struct SyncProgram {
  std::vector<SyncNode> nodes;  // blocks in declaration order, then OBSW
  std::string text;
};

/// Name collision or reserved word after identifier mangling.
class CodegenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SyncProgram emit_sync_program(const Model& model);

}  // namespace csm

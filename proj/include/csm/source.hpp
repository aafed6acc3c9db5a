#pragma once

#include <cstdint>
#include <string>

namespace csm {

/// Position of a construct inside a CSM or sequence file (1-based).
///
/// Spans are annotations: two spans always compare equal so that AST
/// equality is structural. Use same_location() for an exact comparison.
struct SourceSpan {
  std::string file = "<input>";
  std::uint32_t line = 1;
  std::uint32_t column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) { return true; }
};

inline bool same_location(const SourceSpan& a, const SourceSpan& b) {
  return a.file == b.file && a.line == b.line && a.column == b.column;
}

inline bool precedes(const SourceSpan& a, const SourceSpan& b) {
  if (a.line != b.line) return a.line < b.line;
  return a.column < b.column;
}

inline std::string to_string(const SourceSpan& s) {
  return s.file + ":" + std::to_string(s.line) + ":" + std::to_string(s.column);
}

}  // namespace csm

#pragma once

#include <ostream>

#include "csm/interp.hpp"
#include "csm/sequence_file.hpp"

// Readable gtest failure output for library types.
namespace csm {

inline void PrintTo(const RejectionCause& c, std::ostream* os) { *os << to_string(c.kind) << " " << describe(c); }

inline void PrintTo(const TimedTelecommand& tc, std::ostream* os) { *os << to_string(tc); }

inline void PrintTo(const Configuration& c, std::ostream* os) {
  *os << "{now=" << c.now;
  for (const auto& [b, s] : c.block_states) *os << " " << b << ":" << s;
  for (const auto& t : c.timers) *os << " timer(" << t.block << "@" << t.fires_at << ")";
  *os << "}";
}

inline void PrintTo(const Verdict& v, std::ostream* os) {
  if (v.accepted) {
    *os << "accepted at " << *v.quiescent_at << " ";
    PrintTo(*v.final, os);
  } else {
    *os << "rejected ";
    PrintTo(*v.cause, os);
    *os << " last_safe=";
    PrintTo(v.last_safe, os);
  }
}

/// Cause equality without the free-text detail.
inline bool same_cause(const RejectionCause& a, const RejectionCause& b) {
  return a.kind == b.kind && a.tick == b.tick && a.tc == b.tc && a.block == b.block && a.state == b.state &&
         a.condition == b.condition;
}

}  // namespace csm

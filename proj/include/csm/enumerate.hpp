#pragma once

#include <stdexcept>
#include <vector>

#include "csm/interp.hpp"

namespace csm {

struct EnumerationBounds {
  std::size_t max_tcs = 0;
  Tick max_gap = 0;
  std::vector<std::uint64_t> deltas;  // values tried for every `tcd`
  // Upper bound on the candidates simulated at one depth.
  std::size_t max_candidates = 1'000'000;
};

struct MinimalError {
  TcSequence sequence;
  RejectionCause cause;

  bool operator==(const MinimalError&) const = default;
};

class EnumerationOverflow : public std::runtime_error {
 public:
  EnumerationOverflow(std::size_t depth, std::size_t frontier, std::size_t candidates, std::size_t limit);

  std::size_t depth() const { return depth_; }
  std::size_t frontier() const { return frontier_; }
  std::size_t candidates() const { return candidates_; }

 private:
  std::size_t depth_;
  std::size_t frontier_;
  std::size_t candidates_;
};

/// Every rejected sequence whose prefix without its last TC is accepted.
/// Sequences start at t=0, consecutive dates differ by at most max_gap, and
/// fixed TCs carry no delta. Sorted by (length, dates, names, deltas).
///
/// Throws EnumerationOverflow when a depth would exceed max_candidates and
/// std::invalid_argument when deltas is empty or contains 0.
std::vector<MinimalError> enumerate_min_errors(const Model& model, const EnumerationBounds& bounds);

/// The ordering used for the result.
bool sequence_less(const TcSequence& a, const TcSequence& b);

}  // namespace csm

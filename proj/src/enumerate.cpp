#include "csm/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace csm {

EnumerationOverflow::EnumerationOverflow(std::size_t depth, std::size_t frontier, std::size_t candidates,
                                         std::size_t limit)
    : std::runtime_error("bounded search overflow at depth " + std::to_string(depth) + ": frontier of " +
                         std::to_string(frontier) + " extensible sequences yields " + std::to_string(candidates) +
                         " candidates (limit " + std::to_string(limit) + ")"),
      depth_(depth),
      frontier_(frontier),
      candidates_(candidates) {}

bool sequence_less(const TcSequence& a, const TcSequence& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].t != b[i].t) return a[i].t < b[i].t;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name) return a[i].name < b[i].name;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].delta != b[i].delta) return a[i].delta < b[i].delta;
  }
  return false;
}

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

}  // namespace

std::vector<MinimalError> enumerate_min_errors(const Model& model, const EnumerationBounds& bounds) {
  if (bounds.deltas.empty()) throw std::invalid_argument("at least one delta value is required");
  std::vector<std::uint64_t> deltas = bounds.deltas;
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  if (deltas.front() == 0) throw std::invalid_argument("delta values must be at least 1");

  // Every TC the model accepts syntactically, one entry per delta value.
  std::vector<TimedTelecommand> alphabet;
  for (const auto& b : model.blocks) {
    for (const auto& t : b.transitions) {
      if (!t.is_delta()) {
        alphabet.push_back(TimedTelecommand{t.tc, 0, std::nullopt});
        continue;
      }
      for (auto d : deltas) alphabet.push_back(TimedTelecommand{t.tc, 0, d});
    }
  }

  const Interpreter interp(model);
  std::vector<MinimalError> out;

  // A rejected sequence stays extensible while its failure lies at or after
  // its last date: a later TC dated up to the failing tick may still repair
  // it. Dispatch-phase failures at the last date are final, since appended
  // TCs at that tick are dispatched after them.
  struct Node {
    TcSequence seq;
    std::optional<Tick> horizon;  // latest useful date for a rejected node
  };
  std::vector<Node> frontier{Node{}};

  for (std::size_t depth = 1; depth <= bounds.max_tcs && !frontier.empty(); ++depth) {
    const std::size_t gaps = depth == 1 ? 1 : static_cast<std::size_t>(std::min<Tick>(bounds.max_gap, kMaxTick - 1)) + 1;
    const std::size_t candidates = saturating_mul(saturating_mul(frontier.size(), gaps), alphabet.size());
    if (candidates > bounds.max_candidates) {
      throw EnumerationOverflow(depth, frontier.size(), candidates, bounds.max_candidates);
    }

    std::vector<Node> next;
    for (const auto& node : frontier) {
      const Tick last = node.seq.empty() ? 0 : node.seq.back().t;
      for (std::size_t gap = 0; gap < gaps; ++gap) {
        if (gap > kMaxTick - last) break;
        const Tick date = last + gap;
        if (node.horizon && date > *node.horizon) break;
        for (const auto& letter : alphabet) {
          TcSequence seq = node.seq;
          seq.push_back(letter);
          seq.back().t = date;
          Verdict v = interp.verify_event(seq);
          if (v.accepted) {
            next.push_back(Node{std::move(seq), std::nullopt});
            continue;
          }
          const RejectionCause& cause = *v.cause;
          const bool live =
              cause.tick > date || (cause.tick == date && cause.kind == RejectionKind::InvariantViolation);
          if (!node.horizon) out.push_back(MinimalError{seq, cause});
          if (live) next.push_back(Node{std::move(seq), cause.tick});
        }
      }
    }
    frontier = std::move(next);
  }

  std::sort(out.begin(), out.end(),
            [](const MinimalError& a, const MinimalError& b) { return sequence_less(a.sequence, b.sequence); });
  return out;
}

}  // namespace csm

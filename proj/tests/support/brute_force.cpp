#include "brute_force.hpp"

#include <algorithm>
#include <functional>

namespace csm::test {

std::vector<MinimalError> brute_force_min_errors(const Model& model, const EnumerationBounds& bounds) {
  std::vector<TimedTelecommand> letters;  // dates filled in later
  for (const auto& b : model.blocks) {
    for (const auto& t : b.transitions) {
      if (!t.is_delta()) {
        letters.push_back({t.tc, 0, std::nullopt});
        continue;
      }
      std::vector<std::uint64_t> ds = bounds.deltas;
      std::sort(ds.begin(), ds.end());
      ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
      for (auto d : ds) letters.push_back({t.tc, 0, d});
    }
  }

  std::vector<MinimalError> out;
  TcSequence current;
  std::function<void()> extend = [&] {
    if (!current.empty()) {
      const Verdict v = verify(model, current);
      if (!v.accepted) {
        const TcSequence prefix(current.begin(), current.end() - 1);
        if (verify(model, prefix).accepted) out.push_back({current, *v.cause});
      }
    }
    if (current.size() == bounds.max_tcs) return;
    const Tick base = current.empty() ? 0 : current.back().t;
    const Tick max_gap = current.empty() ? 0 : bounds.max_gap;
    for (Tick gap = 0; gap <= max_gap; ++gap) {
      for (auto tc : letters) {
        tc.t = base + gap;
        current.push_back(tc);
        extend();
        current.pop_back();
      }
    }
  };
  extend();
  std::sort(out.begin(), out.end(), [](const MinimalError& a, const MinimalError& b) {
    return sequence_less(a.sequence, b.sequence);
  });
  return out;
}

}  // namespace csm::test

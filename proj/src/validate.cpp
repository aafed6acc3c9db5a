#include "csm/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace csm {

std::string to_string(const Diagnostic& d) {
  return to_string(d.span) + ": error " + d.code + ": " + d.message;
}

namespace {

class Validator {
 public:
  explicit Validator(Model m) : model_(std::move(m)) {}

  ValidationResult run() {
    for (auto& b : model_.blocks) classify_states(b);

    if (model_.blocks.empty()) {
      report(diag::kEmptyModel, "model declares no blocks", SourceSpan{});
    }
    check_consts();
    check_block_names();
    for (const auto& b : model_.blocks) check_block(b);
    check_tc_namespace();
    if (diagnostics_.empty()) check_initial_configuration();

    std::stable_sort(diagnostics_.begin(), diagnostics_.end(), [](const Diagnostic& a, const Diagnostic& b) {
      if (precedes(a.span, b.span)) return true;
      if (precedes(b.span, a.span)) return false;
      return a.code < b.code;
    });

    ValidationResult result;
    result.diagnostics = std::move(diagnostics_);
    if (result.diagnostics.empty()) result.model = std::move(model_);
    return result;
  }

 private:
  void report(const char* code, std::string message, const SourceSpan& span) {
    diagnostics_.push_back(Diagnostic{code, std::move(message), span});
  }

  void check_consts() {
    std::set<std::string> seen;
    for (const auto& c : model_.consts) {
      if (!seen.insert(c.name).second) report(diag::kDuplicateConst, "duplicate constant " + c.name, c.span);
      if (c.value == 0) report(diag::kZeroConst, "constant " + c.name + " must be at least 1", c.span);
    }
  }

  void check_block_names() {
    std::set<std::string> seen;
    for (const auto& b : model_.blocks) {
      if (!seen.insert(b.name).second) report(diag::kDuplicateBlock, "duplicate block " + b.name, b.span);
    }
  }

  void check_block(const Block& b) {
    const std::string where = " in block " + b.name;

    // Interior occurrences of every state, in declaration order.
    std::map<std::string, std::vector<const Transition*>> interior;
    for (const auto& t : b.transitions) {
      for (std::size_t i = 1; i + 1 < t.path.size(); ++i) interior[t.path[i]].push_back(&t);
    }
    for (const auto& [state, uses] : interior) {
      if (state == b.initial) {
        report(diag::kTransientInitial, "initial state " + state + " is used as a transient state" + where,
               b.initial_span);
      } else if (b.is_steady(state)) {
        report(diag::kSteadyAndTransient, "state " + state + " is both steady and transient" + where, uses.front()->span);
      }
      for (std::size_t k = 1; k < uses.size(); ++k) {
        report(diag::kSharedTransient,
               "transient state " + state + " already has a timeout (from " + uses.front()->tc + ")" + where,
               uses[k]->span);
      }
    }

    for (const auto& t : b.transitions) check_transition(t);

    for (const auto& g : b.guards) {
      const Transition* own = nullptr;
      for (const auto& t : b.transitions) {
        if (t.tc == g.tc) own = &t;
      }
      if (own == nullptr) {
        if (lookup_tc(model_, g.tc)) {
          report(diag::kForeignTarget, "guard on " + g.tc + " must be declared in the block that owns it", g.span);
        } else {
          report(diag::kUnknownTarget, "guard on unknown telecommand " + g.tc, g.span);
        }
      }
      check_condition(g.condition);
    }

    for (const auto& inv : b.invariants) {
      if (!b.has_state(inv.state)) {
        report(diag::kUnknownTarget, "invariant on unknown state " + inv.state + where, inv.span);
      }
      check_condition(inv.condition);
    }
  }

  void check_transition(const Transition& t) {
    const std::size_t transients = t.path.size() >= 2 ? t.path.size() - 2 : 0;
    if (t.durations.size() != transients) {
      report(diag::kDurationCount,
             t.tc + " declares " + std::to_string(transients) + " transient state(s) but " +
                 std::to_string(t.durations.size()) + " duration(s)",
             t.span);
    }
    bool param_used = false;
    for (const auto& term : t.durations) {
      if (term.is_literal()) {
        if (term.literal() == 0) report(diag::kZeroDuration, "duration of " + t.tc + " must be at least 1", term.span);
        continue;
      }
      if (t.is_delta() && term.name() == *t.delta_param) {
        param_used = true;
      } else if (model_.find_const(term.name()) == nullptr) {
        report(diag::kUnresolvedDuration, "unknown duration " + term.name() + " in " + t.tc, term.span);
      }
    }
    if (t.is_delta()) {
      if (!param_used) report(diag::kUnusedDelta, "delta parameter " + *t.delta_param + " of " + t.tc + " is unused", t.span);
      if (model_.find_const(*t.delta_param) != nullptr) {
        report(diag::kDeltaShadowsConst, "delta parameter " + *t.delta_param + " shadows a constant", t.span);
      }
    }
  }

  void check_condition(const Condition& c) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& atom : c.atoms) {
      const std::string text = atom.block + ":" + atom.state;
      if (!seen.insert({atom.block, atom.state}).second) {
        report(diag::kDuplicateAtom, "duplicate atom " + text, atom.span);
      }
      const Block* target = model_.find_block(atom.block);
      if (target == nullptr || !target->has_state(atom.state)) {
        report(diag::kUnresolvedAtom, "unresolved atom " + text, atom.span);
      } else if (!target->is_steady(atom.state)) {
        report(diag::kTransientAtom, "atom " + text + " names a transient state", atom.span);
      }
    }
  }

  void check_tc_namespace() {
    std::map<std::string, const Transition*> seen;
    for (const auto& b : model_.blocks) {
      for (const auto& t : b.transitions) {
        auto [it, inserted] = seen.emplace(t.tc, &t);
        if (!inserted) {
          report(diag::kDuplicateTc, "telecommand " + t.tc + " is already declared at " + to_string(it->second->span),
                 t.span);
        }
      }
    }
  }

  // Only meaningful once everything resolves.
  void check_initial_configuration() {
    auto initial_of = [&](const std::string& block) { return model_.find_block(block)->initial; };
    for (const auto& b : model_.blocks) {
      for (const auto& inv : b.invariants) {
        if (inv.state != b.initial) continue;
        for (const auto& atom : inv.condition.atoms) {
          if (initial_of(atom.block) != atom.state) {
            report(diag::kInitialViolation,
                   "invariant " + to_string(inv.condition) + " on initial state " + b.name + "." + b.initial +
                       " is false in the initial configuration",
                   inv.span);
            break;
          }
        }
      }
    }
  }

  Model model_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

ValidationResult validate_model(const Model& raw) { return Validator(raw).run(); }

}  // namespace csm

#include "csm/stc.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace csm {

namespace {

constexpr std::size_t kMaxStepsPerStc = 11;

}  // namespace

std::vector<StcTemplate> parse_templates(std::string_view json_text) {
  using nlohmann::json;
  std::vector<StcTemplate> out;
  try {
    const json doc = json::parse(json_text);
    if (!doc.is_array()) throw StcError("template library must be a JSON array");
    std::set<std::string> names;
    for (const auto& item : doc) {
      StcTemplate t;
      t.name = item.at("name").get<std::string>();
      if (!names.insert(t.name).second) throw StcError("duplicate template " + t.name);
      t.parameters = item.value("parameters", std::vector<std::string>{});
      Tick previous = 0;
      for (const auto& s : item.at("steps")) {
        StcStep step;
        step.tc = s.at("tc").get<std::string>();
        step.offset = s.at("offset").get<Tick>();
        if (s.contains("delta_source") && !s.at("delta_source").is_null()) {
          step.delta_source = s.at("delta_source").get<std::string>();
          if (std::find(t.parameters.begin(), t.parameters.end(), *step.delta_source) == t.parameters.end()) {
            throw StcError("template " + t.name + ": unknown parameter " + *step.delta_source);
          }
        }
        if (step.offset < previous) throw StcError("template " + t.name + ": offsets must be non-decreasing");
        previous = step.offset;
        t.steps.push_back(std::move(step));
      }
      if (t.steps.empty()) throw StcError("template " + t.name + " has no steps");
      out.push_back(std::move(t));
    }
  } catch (const json::exception& e) {
    throw StcError(std::string("malformed template library: ") + e.what());
  }
  return out;
}

std::vector<std::string> lint_templates(const Model& model, const std::vector<StcTemplate>& templates) {
  std::vector<std::string> warnings;
  for (const auto& t : templates) {
    if (t.steps.size() > kMaxStepsPerStc) {
      warnings.push_back("template " + t.name + " has " + std::to_string(t.steps.size()) + " steps (more than " +
                         std::to_string(kMaxStepsPerStc) + ")");
    }
    for (const auto& s : t.steps) {
      if (!lookup_tc(model, s.tc)) warnings.push_back("template " + t.name + ": unknown telecommand " + s.tc);
    }
  }
  return warnings;
}

TcSequence expand_stc(const Model& model, const std::vector<StcTemplate>& templates, const StcRequest& request) {
  auto it = std::find_if(templates.begin(), templates.end(),
                         [&](const StcTemplate& t) { return t.name == request.template_name; });
  if (it == templates.end()) throw StcError("unknown template " + request.template_name);
  for (const auto& p : it->parameters) {
    if (!request.bindings.contains(p)) throw StcError("parameter " + p + " of " + it->name + " is not bound");
  }

  TcSequence out;
  for (const auto& step : it->steps) {
    auto found = lookup_tc(model, step.tc);
    if (!found) throw StcError("template " + it->name + ": unknown telecommand " + step.tc);
    if (step.offset > kMaxTick - request.t0) throw StcError("date of " + step.tc + " exceeds the maximum tick");

    TimedTelecommand tc{step.tc, request.t0 + step.offset, std::nullopt};
    const Transition& t = *found->transition;
    if (t.is_delta()) {
      if (!step.delta_source) throw StcError("template " + it->name + ": " + step.tc + " needs a delta_source");
      tc.delta = request.bindings.at(*step.delta_source);
    } else {
      if (step.delta_source) throw StcError("template " + it->name + ": " + step.tc + " takes no delta");
      tc.delta = total_duration(model, t);
    }
    out.push_back(std::move(tc));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
  return out;
}

TcSequence merge_plans(const TcSequence& existing, const TcSequence& addition) {
  TcSequence out;
  out.reserve(existing.size() + addition.size());
  std::merge(existing.begin(), existing.end(), addition.begin(), addition.end(), std::back_inserter(out),
             [](const TimedTelecommand& a, const TimedTelecommand& b) { return a.t < b.t; });
  return out;
}

Verdict admit(const Model& model, const Configuration& current, const TcSequence& plan) {
  return verify_from(model, current, plan);
}

}  // namespace csm

#include "csm/json_io.hpp"

#include <algorithm>

namespace csm {

using nlohmann::json;

json to_json(const Configuration& c) {
  json states = json::object();
  for (const auto& [block, state] : c.block_states) states[block] = state;
  json timers = json::array();
  for (const auto& t : c.timers) {
    timers.push_back({{"block", t.block}, {"fires_at", t.fires_at}, {"continuation", t.continuation},
                      {"durations", t.durations}});
  }
  return {{"now", c.now}, {"states", states}, {"timers", timers}};
}

json to_json(const RejectionCause& c) {
  auto opt = [](const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); };
  json condition = nullptr;
  if (c.condition) {
    condition = json::array();
    for (const auto& a : c.condition->atoms) condition.push_back(a.block + ":" + a.state);
  }
  return {{"kind", to_string(c.kind)}, {"tick", c.tick},         {"tc", opt(c.tc)},     {"block", opt(c.block)},
          {"state", opt(c.state)},     {"condition", condition}, {"detail", c.detail}};
}

json to_json(const Verdict& v) {
  json out = {{"schema", kVerdictSchema},
              {"verdict", v.accepted ? "accepted" : "rejected"},
              {"cause", v.cause ? to_json(*v.cause) : json(nullptr)},
              {"last_safe", to_json(v.last_safe)},
              {"final", v.final ? to_json(*v.final) : json(nullptr)},
              {"quiescent_at", v.quiescent_at ? json(*v.quiescent_at) : json(nullptr)}};
  if (!v.trace.empty()) {
    json trace = json::array();
    for (const auto& e : v.trace) trace.push_back({{"tick", e.tick}, {"block", e.block}, {"state", e.state}});
    out["trace"] = trace;
  }
  return out;
}

json to_json(const TcSequence& seq) {
  json out = json::array();
  for (const auto& tc : seq) {
    json item = {{"name", tc.name}, {"t", tc.t}};
    if (tc.delta) item["delta"] = *tc.delta;
    out.push_back(item);
  }
  return out;
}

json to_json(const std::vector<MinimalError>& errors) {
  json items = json::array();
  for (const auto& e : errors) items.push_back({{"sequence", to_json(e.sequence)}, {"cause", to_json(e.cause)}});
  return {{"schema", kErrorSuiteSchema}, {"errors", items}};
}

namespace {

Tick tick_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_unsigned() || v.get<Tick>() > kMaxTick) {
    throw ConfigError(std::string("malformed configuration: '") + key + "' must be a tick in 0.." +
                      std::to_string(kMaxTick));
  }
  return v.get<Tick>();
}

}  // namespace

Configuration configuration_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ConfigError("malformed configuration: expected an object");
    Configuration c;
    c.now = tick_field(j, "now");
    const json& states = j.at("states");
    if (!states.is_object()) throw ConfigError("malformed configuration: 'states' must map blocks to states");
    for (const auto& [block, state] : states.items()) c.block_states[block] = state.get<std::string>();
    if (j.contains("timers")) {
      for (const auto& t : j.at("timers")) {
        Timer timer;
        timer.block = t.at("block").get<std::string>();
        timer.fires_at = tick_field(t, "fires_at");
        timer.continuation = t.at("continuation").get<std::vector<std::string>>();
        timer.durations = t.value("durations", std::vector<Tick>{});
        c.timers.push_back(std::move(timer));
      }
    }
    std::sort(c.timers.begin(), c.timers.end(), [](const Timer& a, const Timer& b) { return a.block < b.block; });
    for (std::size_t i = 1; i < c.timers.size(); ++i) {
      if (c.timers[i].block == c.timers[i - 1].block) {
        throw ConfigError("malformed configuration: two timers for block " + c.timers[i].block);
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
}

}  // namespace csm

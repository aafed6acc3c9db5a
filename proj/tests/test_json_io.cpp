#include <gtest/gtest.h>

#include "csm/json_io.hpp"
#include "fixtures.hpp"
#include "printing.hpp"

namespace csm {
namespace {

TEST(JsonIo, AcceptedVerdictDocument) {
  const Model m = test::load_model("minisat.csm");
  const nlohmann::json j = to_json(verify(m, {{"AMPON", 0, {}}, {"MODULON", 5, {}}}));
  EXPECT_EQ(j["schema"], kVerdictSchema);
  EXPECT_EQ(j["verdict"], "accepted");
  EXPECT_TRUE(j["cause"].is_null());
  EXPECT_EQ(j["quiescent_at"], 7);
  EXPECT_EQ(j["final"]["now"], 8);
  EXPECT_EQ(j["final"]["states"]["MODULATOR"], "ON");
  EXPECT_TRUE(j["final"]["timers"].empty());
  EXPECT_FALSE(j.contains("trace"));
}

TEST(JsonIo, RejectedVerdictDocument) {
  const Model m = test::load_model("minisat.csm");
  const nlohmann::json j = to_json(verify(m, {{"MEMON", 0, {}}, {"CLEARFILE", 2, 4}, {"MEMOFF", 4, {}}}, {true}));
  EXPECT_EQ(j["verdict"], "rejected");
  EXPECT_EQ(j["cause"]["kind"], "InvariantViolation");
  EXPECT_EQ(j["cause"]["tick"], 4);
  EXPECT_EQ(j["cause"]["block"], "ERASE");
  EXPECT_EQ(j["cause"]["state"], "CLEAR");
  EXPECT_EQ(j["cause"]["condition"], nlohmann::json::array({"MEMORY:ON"}));
  EXPECT_TRUE(j["cause"]["tc"].is_null());
  EXPECT_TRUE(j["final"].is_null());
  EXPECT_EQ(j["last_safe"]["timers"][0]["block"], "ERASE");
  EXPECT_EQ(j["last_safe"]["timers"][0]["fires_at"], 7);
  EXPECT_TRUE(j["trace"].is_array());
}

TEST(JsonIo, ConfigurationRoundtrip) {
  Configuration c;
  c.now = 12;
  c.block_states = {{"ERASE", "WAIT"}, {"MEMORY", "ON"}};
  c.timers = {Timer{"ERASE", 13, {"CLEAR", "IDLE"}, {4}}};
  EXPECT_EQ(configuration_from_json(to_json(c)), c);
  EXPECT_EQ(configuration_from_json(nlohmann::json::parse(to_json(c).dump())), c);
}

TEST(JsonIo, ConfigurationTimersMayBeOmitted) {
  const Configuration c = configuration_from_json(nlohmann::json::parse(R"({"now": 3, "states": {"A": "S"}})"));
  EXPECT_EQ(c.now, 3u);
  EXPECT_TRUE(c.timers.empty());
}

TEST(JsonIo, MalformedConfigurations) {
  for (const char* text : {R"([])", R"({"states": {}})", R"({"now": -1, "states": {}})", R"({"now": 0, "states": []})",
                           R"({"now": 0, "states": {"A": 3}})", R"({"now": 0, "states": {}, "timers": [{"block": "A"}]})",
                           R"({"now": 0, "states": {"A":"S"}, "timers": [{"block":"A","fires_at":1,"continuation":["B"],"durations":[]},{"block":"A","fires_at":2,"continuation":["B"],"durations":[]}]})"}) {
    EXPECT_THROW(configuration_from_json(nlohmann::json::parse(text)), ConfigError) << text;
  }
}

TEST(JsonIo, ErrorSuite) {
  const Model m = test::load_model("minisat.csm");
  const nlohmann::json j = to_json(enumerate_min_errors(m, {1, 0, {1}}));
  EXPECT_EQ(j["schema"], kErrorSuiteSchema);
  ASSERT_EQ(j["errors"].size(), 6u);
  EXPECT_EQ(j["errors"][0]["sequence"][0]["name"], "AMPOFF");
  EXPECT_EQ(j["errors"][0]["cause"]["kind"], "UnexpectedTc");
}

}  // namespace
}  // namespace csm

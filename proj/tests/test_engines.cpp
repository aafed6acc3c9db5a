#include <gtest/gtest.h>

#include <chrono>

#include "csm/interp.hpp"
#include "fixtures.hpp"
#include "printing.hpp"
#include "generators.hpp"

namespace csm {
namespace {

TEST(EngineEquivalence, RandomCorpusFullVerdicts) {
  test::Rng rng(20240501);
  int rejected = 0;
  for (int i = 0; i < 1500; ++i) {
    const Model m = test::random_model(rng);
    const Interpreter interp(m);
    for (int j = 0; j < 2; ++j) {
      const TcSequence seq = test::random_sequence(m, rng);
      const Verdict cycle = interp.verify(seq, {true});
      const Verdict event = interp.verify_event(seq, {true});
      ASSERT_EQ(cycle, event) << "model:\n" << i << " seq size " << seq.size();
      rejected += cycle.accepted ? 0 : 1;
    }
  }
  // the corpus has to exercise both outcomes
  EXPECT_GT(rejected, 300);
  EXPECT_LT(rejected, 2700);
}

TEST(EngineEquivalence, MinisatHandPickedSequences) {
  const Model m = test::load_model("minisat.csm");
  const std::vector<TcSequence> cases = {
      {},
      {{"AMPON", 0, {}}, {"MODULON", 5, {}}},
      {{"MEMON", 0, {}}, {"CLEARFILE", 2, 4}, {"MEMOFF", 4, {}}},
      {{"MODULON", 0, {}}},
      {{"MEMON", 0, {}}, {"CLEARFILE", 1, 4}, {"MEMOFF", 6, {}}},
      {{"MEMON", 0, {}}, {"CLEARFILE", 1, 4}, {"MEMOFF", 5, {}}},
      {{"AMPON", 0, {}}, {"AMPOFF", 1, {}}, {"AMPON", 2, {}}, {"AMPOFF", 3, {}}},
      {{"AMPON", 0, 1}, {"MODULON", 1, 2}, {"MODULOFF", 3, 3}, {"MODULON", 6, 2}},
      {{"AMPON", 0, {}}, {"AMPON", 0, {}}},
      {{"AMPON", 100000, {}}},
  };
  for (const auto& seq : cases) {
    EXPECT_EQ(verify(m, seq, {true}), verify_event(m, seq, {true})) << seq.size();
  }
}

TEST(EventEngine, SkipsIdleTime) {
  const Model m = test::load_model("minisat.csm");
  const auto begin = std::chrono::steady_clock::now();
  const Verdict v = verify_event(m, {{"AMPON", 0, {}}, {"AMPOFF", 1'000'000'000, {}}});
  const auto elapsed = std::chrono::steady_clock::now() - begin;
  ASSERT_TRUE(v.accepted);
  EXPECT_EQ(v.quiescent_at, 1'000'000'001u);
  EXPECT_LT(elapsed, std::chrono::milliseconds(100));
}

}  // namespace
}  // namespace csm

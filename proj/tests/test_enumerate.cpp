#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"
#include "csm/enumerate.hpp"
#include "fixtures.hpp"
#include "printing.hpp"
#include "generators.hpp"

namespace csm {
namespace {

// Order spelled out independently of sequence_less.
bool reference_less(const TcSequence& a, const TcSequence& b) {
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

void expect_same(std::vector<MinimalError> got, std::vector<MinimalError> want) {
  const auto cmp = [](const MinimalError& a, const MinimalError& b) { return reference_less(a.sequence, b.sequence); };
  ASSERT_TRUE(std::is_sorted(got.begin(), got.end(), cmp));
  std::sort(want.begin(), want.end(), cmp);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_EQ(got[i].sequence, want[i].sequence) << i;
    EXPECT_EQ(got[i].cause, want[i].cause) << i;
  }
}

TEST(Enumerate, SingleTcErrorsOnMinisat) {
  const Model m = test::load_model("minisat.csm");
  const auto errors = enumerate_min_errors(m, {1, 0, {1}});
  std::vector<std::pair<std::string, RejectionKind>> got;
  for (const auto& e : errors) {
    ASSERT_EQ(e.sequence.size(), 1u);
    EXPECT_EQ(e.sequence[0].t, 0u);
    got.emplace_back(e.sequence[0].name, e.cause.kind);
  }
  const std::vector<std::pair<std::string, RejectionKind>> want = {
      {"AMPOFF", RejectionKind::UnexpectedTc},     {"CLEARFILE", RejectionKind::InvariantViolation},
      {"DELFILE", RejectionKind::GuardViolation},  {"MEMOFF", RejectionKind::UnexpectedTc},
      {"MODULOFF", RejectionKind::UnexpectedTc},   {"MODULON", RejectionKind::GuardViolation},
  };
  EXPECT_EQ(got, want);
  EXPECT_EQ(errors[1].sequence[0].delta, 1u);
  EXPECT_EQ(errors[1].cause.tick, 1u);
}

TEST(Enumerate, ZeroLengthBoundGivesNothing) {
  EXPECT_TRUE(enumerate_min_errors(test::load_model("minisat.csm"), {0, 5, {1}}).empty());
  EXPECT_TRUE(enumerate_min_errors(test::load_model("fullsat.csm"), {0, 0, {3}}).empty());
}

TEST(Enumerate, MatchesExhaustiveOracleOnMinisat) {
  const Model m = test::load_model("minisat.csm");
  const EnumerationBounds bounds{3, 6, {1, 4}};
  const auto errors = enumerate_min_errors(m, bounds);
  expect_same(errors, test::brute_force_min_errors(m, bounds));

  const TcSequence invariant_case = {{"MEMON", 0, {}}, {"CLEARFILE", 2, 4}, {"MEMOFF", 4, {}}};
  auto it = std::find_if(errors.begin(), errors.end(), [&](const MinimalError& e) { return e.sequence == invariant_case; });
  ASSERT_NE(it, errors.end());
  EXPECT_EQ(it->cause.kind, RejectionKind::InvariantViolation);
}

TEST(Enumerate, OutputIsMinimal) {
  const Model m = test::load_model("minisat.csm");
  for (const auto& e : enumerate_min_errors(m, {2, 4, {2}})) {
    EXPECT_FALSE(verify(m, e.sequence).accepted);
    EXPECT_TRUE(verify(m, TcSequence(e.sequence.begin(), e.sequence.end() - 1)).accepted);
    EXPECT_EQ(verify(m, e.sequence).cause, e.cause);
  }
}

TEST(Enumerate, ExtendsPrefixesThatALaterTcRepairs) {
  // CLEARFILE alone breaks the memory invariant at tick 1; MEMON at tick 0 repairs it.
  const Model m = test::load_model("minisat.csm");
  ASSERT_FALSE(verify(m, {{"CLEARFILE", 0, 1}}).accepted);
  ASSERT_TRUE(verify(m, {{"CLEARFILE", 0, 1}, {"MEMON", 0, {}}}).accepted);
  const TcSequence extended = {{"CLEARFILE", 0, 1}, {"MEMON", 0, {}}, {"AMPOFF", 3, {}}};
  const auto errors = enumerate_min_errors(m, {3, 3, {1}});
  EXPECT_TRUE(std::any_of(errors.begin(), errors.end(), [&](const MinimalError& e) { return e.sequence == extended; }));
}

TEST(Enumerate, DuplicateDeltasAreIgnored) {
  const Model m = test::load_model("minisat.csm");
  EXPECT_EQ(enumerate_min_errors(m, {2, 3, {4, 1, 4}}), enumerate_min_errors(m, {2, 3, {1, 4}}));
}

TEST(Enumerate, MatchesOracleOnRandomModels) {
  test::Rng rng(99);
  for (int i = 0; i < 60; ++i) {
    const Model m = test::random_model(rng);
    const EnumerationBounds bounds = i % 4 == 0 ? EnumerationBounds{3, 1, {2}} : EnumerationBounds{2, 3, {1, 3}};
    expect_same(enumerate_min_errors(m, bounds), test::brute_force_min_errors(m, bounds));
  }
}

TEST(Enumerate, OverflowReportsFrontier) {
  const Model m = test::load_model("fullsat.csm");
  try {
    enumerate_min_errors(m, {6, 50, {1, 2, 3}, 10'000});
    FAIL() << "expected EnumerationOverflow";
  } catch (const EnumerationOverflow& e) {
    EXPECT_GT(e.candidates(), 10'000u);
    EXPECT_GE(e.frontier(), 1u);
    EXPECT_NE(std::string(e.what()).find("frontier"), std::string::npos);
  }
}

TEST(Enumerate, RejectsBadDeltaLists) {
  const Model m = test::load_model("minisat.csm");
  EXPECT_THROW(enumerate_min_errors(m, {1, 0, {}}), std::invalid_argument);
  EXPECT_THROW(enumerate_min_errors(m, {1, 0, {0}}), std::invalid_argument);
}

}  // namespace
}  // namespace csm

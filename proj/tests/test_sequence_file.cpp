#include <gtest/gtest.h>

#include "csm/sequence_file.hpp"

namespace csm {
namespace {

TEST(SequenceFile, ParsesNamesDatesAndDeltas) {
  const TcSequence seq = parse_sequence(
      "# plan\n"
      "\n"
      "MEMON t=0\n"
      "  CLEARFILE   t=2 delta=4   # trailing comment\n"
      "MEMOFF t=4\n");
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq[0], (TimedTelecommand{"MEMON", 0, std::nullopt}));
  EXPECT_EQ(seq[1], (TimedTelecommand{"CLEARFILE", 2, 4}));
  EXPECT_EQ(seq[2], (TimedTelecommand{"MEMOFF", 4, std::nullopt}));
}

TEST(SequenceFile, KeepsFileOrderEvenWhenDatesDecrease) {
  const TcSequence seq = parse_sequence("A t=5\nB t=1\n");
  EXPECT_EQ(seq[0].name, "A");
  EXPECT_EQ(seq[1].t, 1u);
}

TEST(SequenceFile, RejectsMalformedLines) {
  EXPECT_THROW(parse_sequence("MEMON\n"), ParseError);
  EXPECT_THROW(parse_sequence("MEMON t=\n"), ParseError);
  EXPECT_THROW(parse_sequence("MEMON t=x\n"), ParseError);
  EXPECT_THROW(parse_sequence("MEMON t=1 delta=\n"), ParseError);
  EXPECT_THROW(parse_sequence("MEMON t=1 extra\n"), ParseError);
  EXPECT_THROW(parse_sequence("MEMON t=9223372036854775808\n"), ParseError);
  EXPECT_NO_THROW(parse_sequence("MEMON t=9223372036854775807\n"));
}

TEST(SequenceFile, ErrorLocation) {
  try {
    parse_sequence("A t=1\nB t=oops\n", "plan.seq");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().line, 2u);
    EXPECT_EQ(e.span().file, "plan.seq");
  }
}

TEST(SequenceFile, PrintParseRoundtrip) {
  const TcSequence seq = {{"AMPON", 0, std::nullopt}, {"CLEARFILE", 3, 7}, {"MODULON", 3, 2}};
  EXPECT_EQ(print_sequence(seq), "AMPON t=0\nCLEARFILE t=3 delta=7\nMODULON t=3 delta=2\n");
  EXPECT_EQ(parse_sequence(print_sequence(seq)), seq);
}

}  // namespace
}  // namespace csm

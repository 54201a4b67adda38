// Copyright 2026 The vbdiar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vbdiar/rttm.h"

#include <sstream>

#include <gtest/gtest.h>

#include "vbdiar/error.h"

namespace vbdiar {
namespace {

TEST(RttmTest, FormatsThreeDecimals) {
  const TurnList turns("conv0001", {{0.0, 1.5, "spk0"}, {1.5, 3.25, "spk1"}});
  EXPECT_EQ(FormatRttm(turns),
            "SPEAKER conv0001 1 0.000 1.500 <NA> <NA> spk0 <NA> <NA>\n"
            "SPEAKER conv0001 1 1.500 1.750 <NA> <NA> spk1 <NA> <NA>\n");
}

TEST(RttmTest, RoundTripSnapsRoundedBoundaries) {
  // 0.1 + 0.2 style boundaries that do not survive three decimals exactly.
  const TurnList turns("r", {{0.0, 1.0 / 3.0, "a"}, {1.0 / 3.0, 2.0 / 3.0, "b"},
                             {2.0 / 3.0, 1.7, "a"}});
  std::istringstream in(FormatRttm(turns));
  const auto parsed = ReadRttm(in);
  ASSERT_EQ(parsed.size(), 1u);
  const auto& back = parsed.at("r").turns();
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(back[i].start, turns.turns()[i].start, 5e-4);
    EXPECT_NEAR(back[i].end, turns.turns()[i].end, 5e-4);
    if (i > 0) EXPECT_EQ(back[i].start, back[i - 1].end);
  }
}

TEST(RttmTest, SkipsCommentsAndOtherRecords) {
  std::istringstream in(
      ";; comment\n"
      "# another\n"
      "\n"
      "SPKR-INFO r 1 <NA> <NA> <NA> unknown a <NA> <NA>\n"
      "SPEAKER r 1 2.000 1.000 <NA> <NA> b <NA> <NA>\n"
      "SPEAKER r 1 0.000 2.000 <NA> <NA> a <NA> <NA>\n"
      "SPEAKER q 1 0.000 1.000 <NA> <NA> a <NA> <NA>\n");
  const auto parsed = ReadRttm(in);
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed.at("r").turns()[0].speaker, "a");
  EXPECT_EQ(parsed.at("r").turns()[1].speaker, "b");
}

TEST(RttmTest, MalformedLines) {
  std::istringstream short_line("SPEAKER r 1 0.0\n");
  EXPECT_THROW(ReadRttm(short_line), DataError);
  std::istringstream bad_time("SPEAKER r 1 abc 1.0 <NA> <NA> a <NA> <NA>\n");
  EXPECT_THROW(ReadRttm(bad_time), DataError);
  std::istringstream overlap(
      "SPEAKER r 1 0.000 2.000 <NA> <NA> a <NA> <NA>\n"
      "SPEAKER r 1 1.000 2.000 <NA> <NA> b <NA> <NA>\n");
  EXPECT_THROW(ReadRttm(overlap), DataError);
}

}  // namespace
}  // namespace vbdiar

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

#include "vbdiar/der.h"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles/oracles.h"
#include "vbdiar/error.h"

namespace vbdiar {
namespace {

TurnList Turns(std::vector<Turn> turns) { return TurnList("rec", std::move(turns)); }

TEST(TurnListTest, SortsAndValidates) {
  const auto list = Turns({{5, 10, "B"}, {0, 5, "A"}});
  EXPECT_EQ(list.turns()[0].speaker, "A");
  EXPECT_EQ(list.speakers(), (std::vector<std::string>{"A", "B"}));
  EXPECT_THROW(Turns({{1, 1, "A"}}), DataError);
  EXPECT_THROW(Turns({{0, 5, "A"}, {4, 6, "B"}}), DataError);
}

TEST(ComputeDerTest, IdenticalHypothesis) {
  const auto ref = Turns({{0, 5, "A"}, {5, 10, "B"}});
  EXPECT_EQ(ComputeDer(ref, ref).der, 0.0);
}

TEST(ComputeDerTest, SwappedNames) {
  const auto ref = Turns({{0, 5, "A"}, {5, 10, "B"}});
  const auto hyp = Turns({{0, 5, "B"}, {5, 10, "A"}});
  const auto report = ComputeDer(ref, hyp);
  EXPECT_EQ(report.der, 0.0);
  EXPECT_EQ(report.mapping.at("A"), "B");
  EXPECT_EQ(report.mapping.at("B"), "A");
}

TEST(ComputeDerTest, ShiftedBoundary) {
  const auto ref = Turns({{0, 5, "A"}, {5, 10, "B"}});
  const auto hyp = Turns({{0, 6, "A"}, {6, 10, "B"}});
  const auto report = ComputeDer(ref, hyp, 0.25);
  EXPECT_EQ(report.scored_time, 9.0);
  EXPECT_EQ(report.speaker_error_time, 0.75);
  EXPECT_EQ(report.miss_time, 0.0);
  EXPECT_EQ(report.false_alarm_time, 0.0);
  EXPECT_EQ(report.der, 0.75 / 9.0);
}

TEST(ComputeDerTest, MissAndFalseAlarm) {
  const auto ref = Turns({{0, 4, "A"}, {6, 10, "B"}});
  const auto hyp = Turns({{0, 5, "x"}, {7, 10, "y"}});
  const auto report = ComputeDer(ref, hyp, 0.0);
  EXPECT_DOUBLE_EQ(report.scored_time, 8.0);
  EXPECT_DOUBLE_EQ(report.false_alarm_time, 1.0);
  EXPECT_DOUBLE_EQ(report.miss_time, 1.0);
  EXPECT_DOUBLE_EQ(report.speaker_error_time, 0.0);
}

TEST(ComputeDerTest, EmptyHypothesisIsAllMiss) {
  const auto ref = Turns({{0, 4, "A"}});
  const auto report = ComputeDer(ref, TurnList("rec", {}), 0.0);
  EXPECT_DOUBLE_EQ(report.der, 1.0);
}

TEST(ComputeDerTest, Errors) {
  const auto ref = Turns({{0, 0.4, "A"}});
  EXPECT_THROW(ComputeDer(ref, ref, -0.1), std::invalid_argument);
  EXPECT_THROW(ComputeDer(ref, ref, 0.25), DataError);
}

// Random instances on a 10 ms lattice with up to six turns per side.
TurnList RandomTurns(std::mt19937_64& rng, const std::vector<std::string>& names,
                     bool gaps) {
  std::uniform_int_distribution<int> count(1, 6), length(20, 400), gap(0, 150),
      who(0, static_cast<int>(names.size()) - 1);
  std::vector<Turn> turns;
  int t = gaps ? gap(rng) : 0;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const int len = length(rng);
    turns.push_back({t / 100.0, (t + len) / 100.0, names[who(rng)]});
    t += len + (gaps ? gap(rng) : 0);
  }
  return TurnList("rec", std::move(turns));
}

TEST(ComputeDerTest, AgreesWithGridOracle) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ref = RandomTurns(rng, {"A", "B", "C"}, true);
    const auto hyp = RandomTurns(rng, {"x", "y"}, true);
    const double collar = (trial % 3) * 0.25;
    DerReport report;
    try {
      report = ComputeDer(ref, hyp, collar);
    } catch (const DataError&) {
      continue;
    }
    const auto grid = oracle::GridScore(ref, hyp, collar);
    EXPECT_NEAR(report.der, grid.der, 0.002);
    EXPECT_NEAR(report.scored_time, grid.scored, 0.01);
  }
}

TEST(ComputeDerTest, InvariantUnderRenamingAndSplitting) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto ref = RandomTurns(rng, {"A", "B"}, false);
    const auto hyp = RandomTurns(rng, {"x", "y", "z"}, true);
    double der = 0;
    try {
      der = ComputeDer(ref, hyp, 0.25).der;
    } catch (const DataError&) {
      continue;  // everything inside collars
    }
    std::vector<Turn> renamed, split;
    for (const auto& t : hyp.turns()) {
      renamed.push_back({t.start, t.end, "h_" + t.speaker});
      const double mid = 0.5 * (t.start + t.end);
      split.push_back({t.start, mid, t.speaker});
      split.push_back({mid, t.end, t.speaker});
    }
    EXPECT_NEAR(ComputeDer(ref, TurnList("rec", renamed), 0.25).der, der, 1e-12);
    EXPECT_NEAR(ComputeDer(ref, TurnList("rec", split), 0.25).der, der, 1e-12);
  }
}

TEST(ComputeDerTest, CollarMonotonicity) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto ref = RandomTurns(rng, {"A", "B"}, true);
    const auto hyp = RandomTurns(rng, {"x", "y"}, true);
    DerReport last;
    bool have_last = false;
    for (double collar : {0.0, 0.1, 0.25, 0.5}) {
      DerReport r;
      try {
        r = ComputeDer(ref, hyp, collar);
      } catch (const DataError&) {
        break;
      }
      if (have_last) {
        EXPECT_LE(r.scored_time, last.scored_time + 1e-12);
        EXPECT_LE(r.miss_time, last.miss_time + 1e-12);
        EXPECT_LE(r.false_alarm_time, last.false_alarm_time + 1e-12);
        EXPECT_LE(r.speaker_error_time, last.speaker_error_time + 1e-12);
      }
      last = r;
      have_last = true;
    }
  }
}

TEST(OptimalSpeakerMappingTest, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 10);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<std::string> refs = {"A", "B", "C"};
    const std::vector<std::string> hyps = {"x", "y"};
    std::vector<std::vector<double>> overlap(3, std::vector<double>(2));
    for (auto& row : overlap) {
      for (auto& v : row) v = u(rng) < 3 ? 0.0 : u(rng);
    }
    const auto mapping = OptimalSpeakerMapping(refs, hyps, overlap);
    double total = 0;
    std::set<std::string> used;
    for (const auto& [h, r] : mapping) {
      EXPECT_TRUE(used.insert(r).second);
      const int hi = h == "x" ? 0 : 1;
      const int ri = r[0] - 'A';
      total += overlap[ri][hi];
    }
    EXPECT_NEAR(total, oracle::BestMappingOverlap(overlap), 1e-12);
  }
}

TEST(MapSpeakersTest, IdentityAndSwap) {
  const auto ref = Turns({{0, 5, "A"}, {5, 10, "B"}});
  auto identity = MapSpeakers(ref, ref);
  EXPECT_EQ(identity.at("A"), "A");
  EXPECT_EQ(identity.at("B"), "B");
  const auto swapped = MapSpeakers(ref, Turns({{0, 5, "B"}, {5, 10, "A"}}));
  EXPECT_EQ(swapped.at("A"), "B");
}

TEST(MapSpeakersTest, ThreeReferenceTwoHypothesisFixture) {
  const auto ref = Turns({{0, 3, "A"}, {3, 5, "B"}, {5, 9, "C"}, {9, 10, "A"}});
  const auto hyp = Turns({{0, 4, "x"}, {4, 10, "y"}});
  const auto mapping = MapSpeakers(ref, hyp);
  // x overlaps A 3 s, B 1 s; y overlaps A 1 s, B 1 s, C 4 s. Best: x->A, y->C.
  EXPECT_EQ(mapping.at("x"), "A");
  EXPECT_EQ(mapping.at("y"), "C");
}

}  // namespace
}  // namespace vbdiar

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

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>

#include "vbdiar/error.h"

namespace vbdiar {

TurnList::TurnList(std::string recording_id, std::vector<Turn> turns)
    : recording_id_(std::move(recording_id)), turns_(std::move(turns)) {
  for (const auto& t : turns_) {
    if (!std::isfinite(t.start) || !std::isfinite(t.end) || !(t.end > t.start)) {
      throw DataError("turn of '" + t.speaker + "' in " + recording_id_ +
                      " has non-positive duration");
    }
  }
  std::stable_sort(turns_.begin(), turns_.end(), [](const Turn& a, const Turn& b) {
    return a.start < b.start;
  });
  for (std::size_t i = 1; i < turns_.size(); ++i) {
    if (turns_[i].start < turns_[i - 1].end) {
      throw DataError("overlapping turns in " + recording_id_ + " at " +
                      std::to_string(turns_[i].start) + "s");
    }
  }
}

std::vector<std::string> TurnList::speakers() const {
  std::set<std::string> names;
  for (const auto& t : turns_) names.insert(t.speaker);
  return {names.begin(), names.end()};
}

namespace {

// Speaker index active at time t, or -1.
int SpeakerAt(const std::vector<Turn>& turns, const std::vector<int>& speaker_index,
              double t) {
  auto it = std::upper_bound(turns.begin(), turns.end(), t,
                             [](double value, const Turn& turn) { return value < turn.start; });
  if (it == turns.begin()) return -1;
  --it;
  if (t < it->end) return speaker_index[it - turns.begin()];
  return -1;
}

std::vector<int> IndexSpeakers(const TurnList& list, const std::vector<std::string>& names) {
  std::vector<int> index;
  index.reserve(list.turns().size());
  for (const auto& t : list.turns()) {
    index.push_back(static_cast<int>(
        std::lower_bound(names.begin(), names.end(), t.speaker) - names.begin()));
  }
  return index;
}

using Intervals = std::vector<std::pair<double, double>>;

Intervals MergeIntervals(Intervals intervals) {
  std::sort(intervals.begin(), intervals.end());
  Intervals merged;
  for (const auto& iv : intervals) {
    if (!merged.empty() && iv.first <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, iv.second);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

bool Inside(const Intervals& merged, double t) {
  auto it = std::upper_bound(merged.begin(), merged.end(), t,
                             [](double value, const std::pair<double, double>& iv) {
                               return value < iv.first;
                             });
  if (it == merged.begin()) return false;
  --it;
  return t < it->second;
}

struct Tally {
  std::vector<std::vector<double>> overlap;  // [ref][hyp]
  double scored = 0.0;
  double miss = 0.0;
  double false_alarm = 0.0;
};

Tally TallyTime(const TurnList& reference, const TurnList& hypothesis,
                const std::vector<std::string>& ref_names,
                const std::vector<std::string>& hyp_names, const Intervals& no_score) {
  const auto ref_index = IndexSpeakers(reference, ref_names);
  const auto hyp_index = IndexSpeakers(hypothesis, hyp_names);

  std::vector<double> points;
  for (const auto* list : {&reference, &hypothesis}) {
    for (const auto& t : list->turns()) {
      points.push_back(t.start);
      points.push_back(t.end);
    }
  }
  for (const auto& [a, b] : no_score) {
    points.push_back(a);
    points.push_back(b);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Tally tally;
  tally.overlap.assign(ref_names.size(), std::vector<double>(hyp_names.size(), 0.0));
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double a = points[i - 1];
    const double b = points[i];
    const double mid = 0.5 * (a + b);
    if (Inside(no_score, mid)) continue;
    const double length = b - a;
    const int r = SpeakerAt(reference.turns(), ref_index, mid);
    const int h = SpeakerAt(hypothesis.turns(), hyp_index, mid);
    if (r >= 0) {
      tally.scored += length;
      if (h < 0) {
        tally.miss += length;
      } else {
        tally.overlap[r][h] += length;
      }
    } else if (h >= 0) {
      tally.false_alarm += length;
    }
  }
  return tally;
}

}  // namespace

std::map<std::string, std::string> OptimalSpeakerMapping(
    const std::vector<std::string>& reference_speakers,
    const std::vector<std::string>& hypothesis_speakers,
    const std::vector<std::vector<double>>& overlap) {
  const int num_ref = static_cast<int>(reference_speakers.size());
  const int num_hyp = static_cast<int>(hypothesis_speakers.size());
  std::vector<int> current(num_hyp, -1);
  std::vector<int> best(num_hyp, -1);
  std::vector<bool> used(num_ref, false);
  double best_total = -1.0;

  std::function<void(int, double)> search = [&](int h, double total) {
    if (h == num_hyp) {
      if (total > best_total) {
        best_total = total;
        best = current;
      }
      return;
    }
    for (int r = 0; r < num_ref; ++r) {
      if (used[r]) continue;
      used[r] = true;
      current[h] = r;
      search(h + 1, total + overlap[r][h]);
      used[r] = false;
    }
    current[h] = -1;
    search(h + 1, total);
  };
  search(0, 0.0);

  std::map<std::string, std::string> mapping;
  for (int h = 0; h < num_hyp; ++h) {
    if (best[h] >= 0) mapping[hypothesis_speakers[h]] = reference_speakers[best[h]];
  }
  return mapping;
}

std::map<std::string, std::string> MapSpeakers(const TurnList& reference,
                                               const TurnList& hypothesis) {
  const auto ref_names = reference.speakers();
  const auto hyp_names = hypothesis.speakers();
  const Tally tally = TallyTime(reference, hypothesis, ref_names, hyp_names, {});
  return OptimalSpeakerMapping(ref_names, hyp_names, tally.overlap);
}

DerReport ComputeDer(const TurnList& reference, const TurnList& hypothesis,
                     double collar) {
  if (!(collar >= 0.0)) throw std::invalid_argument("collar must be >= 0");
  Intervals zones;
  if (collar > 0.0) {
    for (const auto& t : reference.turns()) {
      zones.emplace_back(t.start - collar, t.start + collar);
      zones.emplace_back(t.end - collar, t.end + collar);
    }
  }
  zones = MergeIntervals(std::move(zones));

  const auto ref_names = reference.speakers();
  const auto hyp_names = hypothesis.speakers();
  const Tally tally = TallyTime(reference, hypothesis, ref_names, hyp_names, zones);
  if (!(tally.scored > 0.0)) {
    throw DataError("no scored time left in " + reference.recording_id() +
                    " after removing collars");
  }

  DerReport report;
  report.mapping = OptimalSpeakerMapping(ref_names, hyp_names, tally.overlap);
  for (std::size_t r = 0; r < ref_names.size(); ++r) {
    for (std::size_t h = 0; h < hyp_names.size(); ++h) {
      const auto it = report.mapping.find(hyp_names[h]);
      if (it == report.mapping.end() || it->second != ref_names[r]) {
        report.speaker_error_time += tally.overlap[r][h];
      }
    }
  }
  report.scored_time = tally.scored;
  report.miss_time = tally.miss;
  report.false_alarm_time = tally.false_alarm;
  report.der = (report.miss_time + report.false_alarm_time + report.speaker_error_time) /
               report.scored_time;
  return report;
}

}  // namespace vbdiar

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

#ifndef VBDIAR_DER_H_
#define VBDIAR_DER_H_

#include <map>
#include <string>
#include <vector>

namespace vbdiar {

struct Turn {
  double start = 0.0;  // seconds
  double end = 0.0;
  std::string speaker;
};

// Single-speaker turns of one recording, sorted by start time. Turns may touch
// but not overlap.
class TurnList {
 public:
  TurnList() = default;
  // Sorts the turns. Throws DataError on a turn with end <= start or on
  // overlapping turns.
  TurnList(std::string recording_id, std::vector<Turn> turns);

  const std::string& recording_id() const { return recording_id_; }
  const std::vector<Turn>& turns() const { return turns_; }
  bool empty() const { return turns_.empty(); }
  // Sorted, de-duplicated speaker names.
  std::vector<std::string> speakers() const;

 private:
  std::string recording_id_;
  std::vector<Turn> turns_;
};

struct DerReport {
  double scored_time = 0.0;
  double miss_time = 0.0;
  double false_alarm_time = 0.0;
  double speaker_error_time = 0.0;
  double der = 0.0;
  // hypothesis speaker -> reference speaker
  std::map<std::string, std::string> mapping;
};

// One-to-one partial mapping maximizing the total of `overlap`
// (overlap[r][h] between reference speaker r and hypothesis speaker h).
// Exhaustive; among optimal mappings the first in lexicographic enumeration
// order (hypothesis names ascending, reference candidates ascending, then
// unmapped) wins.
std::map<std::string, std::string> OptimalSpeakerMapping(
    const std::vector<std::string>& reference_speakers,
    const std::vector<std::string>& hypothesis_speakers,
    const std::vector<std::vector<double>>& overlap);

// Mapping from hypothesis to reference speakers maximizing total overlapped
// time (no collar).
std::map<std::string, std::string> MapSpeakers(const TurnList& reference,
                                               const TurnList& hypothesis);

// Interval-exact diarization error rate. No-score zones of +-collar around
// every reference turn boundary are removed from scored time and from every
// error term. Throws DataError when nothing is left to score.
DerReport ComputeDer(const TurnList& reference, const TurnList& hypothesis,
                     double collar = 0.25);

}  // namespace vbdiar

#endif  // VBDIAR_DER_H_

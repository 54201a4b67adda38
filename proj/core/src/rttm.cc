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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "vbdiar/error.h"

namespace vbdiar {

void WriteRttm(std::ostream& os, const TurnList& turns) {
  char buffer[64];
  for (const auto& t : turns.turns()) {
    os << "SPEAKER " << turns.recording_id() << " 1 ";
    // Round both ends to whole milliseconds so touching turns still touch.
    const long long start_ms = std::llround(t.start * 1000.0);
    const long long end_ms = std::llround(t.end * 1000.0);
    std::snprintf(buffer, sizeof(buffer), "%.3f %.3f", start_ms / 1000.0,
                  (end_ms - start_ms) / 1000.0);
    os << buffer << " <NA> <NA> " << t.speaker << " <NA> <NA>\n";
  }
}

std::string FormatRttm(const TurnList& turns) {
  std::ostringstream os;
  WriteRttm(os, turns);
  return os.str();
}

std::map<std::string, TurnList> ReadRttm(std::istream& is) {
  constexpr double kSnap = 5e-4;
  std::map<std::string, std::vector<Turn>> by_recording;
  std::string line;
  int line_number = 0;
  while (std::getline(is, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string type;
    if (!(fields >> type) || type[0] == ';' || type[0] == '#') continue;
    if (type != "SPEAKER") continue;
    std::string recording, channel, start_text, duration_text, ortho, stype, speaker;
    if (!(fields >> recording >> channel >> start_text >> duration_text >> ortho >> stype >>
          speaker)) {
      throw DataError("RTTM line " + std::to_string(line_number) + " has too few fields");
    }
    double start = 0.0;
    double duration = 0.0;
    try {
      start = std::stod(start_text);
      duration = std::stod(duration_text);
    } catch (const std::exception&) {
      throw DataError("RTTM line " + std::to_string(line_number) + " has a bad time field");
    }
    by_recording[recording].push_back({start, start + duration, speaker});
  }

  std::map<std::string, TurnList> out;
  for (auto& [recording, turns] : by_recording) {
    std::stable_sort(turns.begin(), turns.end(),
                     [](const Turn& a, const Turn& b) { return a.start < b.start; });
    for (std::size_t i = 1; i < turns.size(); ++i) {
      if (std::abs(turns[i].start - turns[i - 1].end) < kSnap) {
        turns[i - 1].end = turns[i].start;
      }
    }
    out.emplace(recording, TurnList(recording, std::move(turns)));
  }
  return out;
}

}  // namespace vbdiar

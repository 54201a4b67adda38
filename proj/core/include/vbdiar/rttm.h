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

#ifndef VBDIAR_RTTM_H_
#define VBDIAR_RTTM_H_

#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "vbdiar/der.h"

namespace vbdiar {

// SPEAKER <recording-id> 1 <start> <duration> <NA> <NA> <speaker> <NA> <NA>
// with start and duration printed to exactly three decimals.
void WriteRttm(std::ostream& os, const TurnList& turns);
std::string FormatRttm(const TurnList& turns);

// Parses SPEAKER lines, grouped by recording id. Blank lines and lines
// starting with ';' or '#' are skipped; other record types are ignored.
// Adjacent turns whose boundaries differ by less than half a millisecond are
// snapped together, undoing the three-decimal rounding. Throws DataError on
// malformed lines.
std::map<std::string, TurnList> ReadRttm(std::istream& is);

}  // namespace vbdiar

#endif  // VBDIAR_RTTM_H_

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

#ifndef VBDIAR_TOOLS_DIARIZATION_H_
#define VBDIAR_TOOLS_DIARIZATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vbdiar/plda.h"
#include "vbdiar/preprocess.h"
#include "vbdiar/vb.h"

namespace vbdiar::tools {

enum class Method { kVb, kVbDa, kKMeansPca };
enum class InitKind { kRandom, kCosine, kLlr };

Method ParseMethod(const std::string& name);
InitKind ParseInit(const std::string& name);
std::string MethodName(Method method);
std::string InitName(InitKind init);

struct DiarizeOptions {
  Method method = Method::kVb;
  InitKind init = InitKind::kRandom;
  int num_speakers = 2;
  std::uint64_t seed = 0;
  ConvergenceConfig convergence;
  AnnealSchedule schedule;  // used by kVbDa
  int heuristic_attempts = 10;
  int heuristic_vb_iterations = 4;
  int kmeans_restarts = 10;
  bool record_trace = false;
};

struct DiarizeOutput {
  Assignment labels;
  std::vector<VbTraceRecord> trace;
};

// Clusters the segments of one conversation. VB methods use `model`; the
// baseline uses only the embeddings. Conversations with fewer segments than
// speakers are labeled all-0.
DiarizeOutput DiarizeSegments(const TwoCovPlda& model, const Embeddings& embeddings,
                              const DiarizeOptions& options);

}  // namespace vbdiar::tools

#endif  // VBDIAR_TOOLS_DIARIZATION_H_

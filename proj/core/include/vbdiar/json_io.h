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

#ifndef VBDIAR_JSON_IO_H_
#define VBDIAR_JSON_IO_H_

#include <istream>
#include <string>
#include <vector>

#include "vbdiar/plda.h"
#include "vbdiar/preprocess.h"
#include "vbdiar/synth.h"
#include "vbdiar/vb.h"

namespace vbdiar {

inline constexpr const char* kFormatVersion = "1.0";

// {"format_version", "dim", "mu", "between_precision", "within_precision"},
// matrices as row-major nested arrays.
std::string ModelToJson(const TwoCovPlda& model);
// Throws DataError on malformed documents or invalid parameters.
TwoCovPlda ModelFromJson(const std::string& text);

// {"format_version", "input_dim", "output_dim", "lda",
//  "whitener": {"matrix", "offset"}, "length_normalize"}
std::string PipelineToJson(const ProjectionPipeline& pipeline);
ProjectionPipeline PipelineFromJson(const std::string& text);

// JSON Lines, one {"speaker": string, "vector": [..]} per line.
std::string TrainingSetToJsonl(const std::vector<LabeledVector>& data);
std::vector<LabeledVector> TrainingSetFromJsonl(std::istream& is);

// JSON Lines, one {"segment_index", "start", "end", "vector"} per segment.
struct SegmentEmbeddings {
  std::vector<SegmentSpan> spans;
  Embeddings embeddings;
};
std::string EmbeddingsToJsonl(const std::vector<SegmentSpan>& spans,
                              const Embeddings& embeddings);
// Segments are returned ordered by segment_index, which must be 0..M-1.
SegmentEmbeddings EmbeddingsFromJsonl(std::istream& is);

// {"iteration", "beta", "free_energy", "max_q_delta"} per line.
std::string TraceToJsonl(const std::vector<VbTraceRecord>& trace);

}  // namespace vbdiar

#endif  // VBDIAR_JSON_IO_H_

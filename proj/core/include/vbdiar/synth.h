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

#ifndef VBDIAR_SYNTH_H_
#define VBDIAR_SYNTH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "vbdiar/der.h"
#include "vbdiar/plda.h"

namespace vbdiar {

struct IntRange {
  int min = 0;
  int max = 0;
};

struct RealRange {
  double min = 0.0;
  double max = 0.0;
};

struct CorpusSpec {
  int num_conversations = 10;
  int num_speakers_per_conversation = 2;
  int dim = 10;
  IntRange segments_per_conversation{20, 60};
  RealRange segment_duration_seconds{1.0, 5.0};
  // Expected time share of speaker 0 when there are two speakers.
  double dominance = 0.5;
  // Multiplies the between-speaker covariance of the base model.
  double separation = 1.0;
  // Scale the residual covariance of a segment of length T by 5 s / T.
  bool duration_scaled_residual = false;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument naming the offending field.
  void Validate() const;
};

struct SegmentSpan {
  double start = 0.0;
  double end = 0.0;
};

struct Conversation {
  std::string recording_id;
  std::vector<SegmentSpan> spans;
  Embeddings embeddings;  // one row per segment
  Assignment labels;      // ground truth
  TurnList reference;     // consecutive same-speaker segments merged
};

// mu = 0, Lambda = I, L = I.
TwoCovPlda IsotropicModel(int dim);

// The generating model of a corpus: `base` with its between-speaker
// covariance multiplied by spec.separation.
TwoCovPlda CorpusModel(const CorpusSpec& spec, const TwoCovPlda& base);

// Reference speaker name for speaker index s.
std::string SpeakerName(int s);

// Merges consecutive segments with the same label into turns.
TurnList TurnsFromSegments(const std::string& recording_id,
                           const std::vector<SegmentSpan>& spans,
                           const Assignment& labels);

// Conversation c uses sub-seeds DeriveSeed(seed, 2c) for embeddings and
// DeriveSeed(seed, 2c + 1) for segment counts and durations. Segment times
// are whole milliseconds and segments tile [0, total duration).
std::vector<Conversation> GenerateCorpus(const CorpusSpec& spec, const TwoCovPlda& base);

struct TrainingSetOptions {
  RealRange cut_duration_seconds{2.0, 20.0};
  bool duration_scaled_residual = false;
};

// One speaker vector per speaker and one residual draw per cut.
std::vector<LabeledVector> GeneratePldaTrainingSet(int num_speakers, int cuts_per_speaker,
                                                   const TwoCovPlda& model,
                                                   std::uint64_t seed,
                                                   const TrainingSetOptions& options = {});

}  // namespace vbdiar

#endif  // VBDIAR_SYNTH_H_

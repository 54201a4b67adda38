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

#include "vbdiar/synth.h"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "vbdiar/random.h"

namespace vbdiar {
namespace {

constexpr double kReferenceDuration = 5.0;

SpeakerPrior ConversationPrior(const CorpusSpec& spec) {
  if (spec.num_speakers_per_conversation == 2) {
    return SpeakerPrior(std::vector<double>{spec.dominance, 1.0 - spec.dominance});
  }
  return SpeakerPrior(spec.num_speakers_per_conversation);
}

}  // namespace

void CorpusSpec::Validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (num_conversations < 1) fail("num_conversations must be >= 1");
  if (num_speakers_per_conversation < 1) fail("num_speakers_per_conversation must be >= 1");
  if (dim < 1) fail("dim must be >= 1");
  if (segments_per_conversation.min < 1 ||
      segments_per_conversation.max < segments_per_conversation.min) {
    fail("segments_per_conversation must satisfy 1 <= min <= max");
  }
  if (!(segment_duration_seconds.min >= 0.001) ||
      !(segment_duration_seconds.max >= segment_duration_seconds.min)) {
    fail("segment_duration_seconds must satisfy 0.001 <= min <= max");
  }
  if (!(dominance >= 0.5 && dominance < 1.0)) fail("dominance must be in [0.5, 1)");
  if (!(separation > 0.0) || !std::isfinite(separation)) fail("separation must be > 0");
}

TwoCovPlda IsotropicModel(int dim) {
  return TwoCovPlda(Eigen::VectorXd::Zero(dim), Eigen::MatrixXd::Identity(dim, dim),
                    Eigen::MatrixXd::Identity(dim, dim));
}

TwoCovPlda CorpusModel(const CorpusSpec& spec, const TwoCovPlda& base) {
  return TwoCovPlda(base.mu(), base.between_precision() / spec.separation,
                    base.within_precision());
}

std::string SpeakerName(int s) { return "spk" + std::to_string(s); }

TurnList TurnsFromSegments(const std::string& recording_id,
                           const std::vector<SegmentSpan>& spans,
                           const Assignment& labels) {
  std::vector<Turn> turns;
  for (std::size_t m = 0; m < spans.size(); ++m) {
    const std::string name = SpeakerName(labels[m]);
    if (!turns.empty() && turns.back().speaker == name &&
        turns.back().end == spans[m].start) {
      turns.back().end = spans[m].end;
    } else {
      turns.push_back({spans[m].start, spans[m].end, name});
    }
  }
  return TurnList(recording_id, std::move(turns));
}

std::vector<Conversation> GenerateCorpus(const CorpusSpec& spec, const TwoCovPlda& base) {
  spec.Validate();
  if (base.dim() != spec.dim) {
    throw std::invalid_argument("model dimension does not match the corpus dim");
  }
  const TwoCovPlda model = CorpusModel(spec, base);
  const SpeakerPrior prior = ConversationPrior(spec);
  const int min_ms = static_cast<int>(std::lround(spec.segment_duration_seconds.min * 1000.0));
  const int max_ms = static_cast<int>(std::lround(spec.segment_duration_seconds.max * 1000.0));

  std::vector<Conversation> corpus;
  corpus.reserve(spec.num_conversations);
  for (int c = 0; c < spec.num_conversations; ++c) {
    const auto stream = static_cast<std::uint64_t>(c);
    Rng timing(DeriveSeed(spec.seed, 2 * stream + 1));
    const int num_segments = std::uniform_int_distribution<int>(
        spec.segments_per_conversation.min, spec.segments_per_conversation.max)(timing);

    Conversation conv;
    char id[32];
    std::snprintf(id, sizeof(id), "conv%04d", c);
    conv.recording_id = id;
    std::vector<double> residual_scales;
    long long cursor_ms = 0;
    std::uniform_int_distribution<int> duration_ms(min_ms, max_ms);
    for (int m = 0; m < num_segments; ++m) {
      const int length = duration_ms(timing);
      conv.spans.push_back({cursor_ms / 1000.0, (cursor_ms + length) / 1000.0});
      residual_scales.push_back(kReferenceDuration / (length / 1000.0));
      cursor_ms += length;
    }

    auto sample = SampleConversation(model, prior, num_segments,
                                     DeriveSeed(spec.seed, 2 * stream),
                                     spec.duration_scaled_residual ? &residual_scales : nullptr);
    conv.embeddings = std::move(sample.embeddings);
    conv.labels = std::move(sample.labels);
    conv.reference = TurnsFromSegments(conv.recording_id, conv.spans, conv.labels);
    corpus.push_back(std::move(conv));
  }
  return corpus;
}

std::vector<LabeledVector> GeneratePldaTrainingSet(int num_speakers, int cuts_per_speaker,
                                                   const TwoCovPlda& model,
                                                   std::uint64_t seed,
                                                   const TrainingSetOptions& options) {
  if (num_speakers < 2) throw std::invalid_argument("num_speakers must be >= 2");
  if (cuts_per_speaker < 1) throw std::invalid_argument("cuts_per_speaker must be >= 1");
  if (!(options.cut_duration_seconds.min > 0.0) ||
      options.cut_duration_seconds.max < options.cut_duration_seconds.min) {
    throw std::invalid_argument("cut durations must satisfy 0 < min <= max");
  }
  const SpeakerPrior single(1);
  std::vector<LabeledVector> out;
  out.reserve(static_cast<std::size_t>(num_speakers) * cuts_per_speaker);
  for (int i = 0; i < num_speakers; ++i) {
    const auto stream = static_cast<std::uint64_t>(i);
    std::vector<double> scales;
    if (options.duration_scaled_residual) {
      Rng timing(DeriveSeed(seed, 2 * stream + 1));
      std::uniform_real_distribution<double> duration(options.cut_duration_seconds.min,
                                                      options.cut_duration_seconds.max);
      for (int j = 0; j < cuts_per_speaker; ++j) {
        scales.push_back(kReferenceDuration / duration(timing));
      }
    }
    const auto sample =
        SampleConversation(model, single, cuts_per_speaker, DeriveSeed(seed, 2 * stream),
                           options.duration_scaled_residual ? &scales : nullptr);
    char name[32];
    std::snprintf(name, sizeof(name), "spk%05d", i);
    for (int j = 0; j < cuts_per_speaker; ++j) {
      out.push_back({name, sample.embeddings.row(j).transpose()});
    }
  }
  return out;
}

}  // namespace vbdiar

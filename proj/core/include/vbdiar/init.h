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

#ifndef VBDIAR_INIT_H_
#define VBDIAR_INIT_H_

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "vbdiar/plda.h"
#include "vbdiar/vb.h"

namespace vbdiar {

// M x S row-stochastic matrix with strictly positive entries, each row drawn
// independently. Deterministic given seed.
Eigen::MatrixXd RandomInit(int num_segments, int num_speakers, std::uint64_t seed);

enum class PairMetric {
  kCosine,   // cosine similarity of speaker means
  kPldaLlr,  // same-speaker PLDA log-likelihood ratio of speaker means
};

// Three-provisional-speaker restart heuristic. Each attempt draws a random
// 3-speaker q (seeded by DeriveSeed(seed, attempt)), runs `vb_iterations`
// VB sweeps at beta = 1, and scores the three pairs of speaker means. The
// pair with the lowest similarity across all attempts wins; ties go to the
// earliest attempt, then the earliest pair in (0,1), (0,2), (1,2) order.
struct HeuristicInit {
  PairMetric metric = PairMetric::kCosine;
  int attempts = 10;
  int vb_iterations = 4;
  std::uint64_t seed = 0;

  void Validate() const;
};

struct PairCandidate {
  int attempt = 0;
  int first = 0;
  int second = 0;
  double similarity = 0.0;
};

struct HeuristicInitResult {
  SpeakerPosteriors speakers;  // the selected two speakers
  PairCandidate selected;
  std::vector<PairCandidate> candidates;  // 3 per attempt, in scan order
  std::vector<VbState> attempt_states;    // final 3-speaker state per attempt
  // Attempts where some provisional speaker holds < 1 segment of
  // responsibility mass. They are still scored.
  std::vector<int> degenerate_attempts;
};

// Similarity of two speaker means under `metric` (lower means more distant).
// Throws NumericalError when the value is not finite.
double PairSimilarity(const TwoCovPlda& model, PairMetric metric,
                      const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// The least similar pair among `means`, ties to the earliest pair.
std::pair<int, int> MostDistantPair(const TwoCovPlda& model, PairMetric metric,
                                    const std::vector<Eigen::VectorXd>& means);

HeuristicInitResult HeuristicPairInit(const TwoCovPlda& model,
                                      const Embeddings& embeddings,
                                      const HeuristicInit& strategy);

}  // namespace vbdiar

#endif  // VBDIAR_INIT_H_

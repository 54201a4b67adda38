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

#include "vbdiar/init.h"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "vbdiar/error.h"
#include "vbdiar/random.h"

namespace vbdiar {

Eigen::MatrixXd RandomInit(int num_segments, int num_speakers, std::uint64_t seed) {
  if (num_segments < 1 || num_speakers < 1) {
    throw std::invalid_argument("random init needs M >= 1 and S >= 1");
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> uniform(std::numeric_limits<double>::min(), 1.0);
  Eigen::MatrixXd q(num_segments, num_speakers);
  for (int m = 0; m < num_segments; ++m) {
    for (int s = 0; s < num_speakers; ++s) q(m, s) = uniform(rng);
    q.row(m) /= q.row(m).sum();
  }
  return q;
}

void HeuristicInit::Validate() const {
  if (attempts < 1) throw std::invalid_argument("heuristic init attempts must be >= 1");
  if (vb_iterations < 1) {
    throw std::invalid_argument("heuristic init vb_iterations must be >= 1");
  }
}

double PairSimilarity(const TwoCovPlda& model, PairMetric metric,
                      const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  double value = 0.0;
  switch (metric) {
    case PairMetric::kCosine:
      value = a.dot(b) / (a.norm() * b.norm());
      break;
    case PairMetric::kPldaLlr:
      value = LlrSameSpeaker(model, a, b);
      break;
  }
  if (!std::isfinite(value)) {
    throw NumericalError("speaker pair similarity is not finite");
  }
  return value;
}

std::pair<int, int> MostDistantPair(const TwoCovPlda& model, PairMetric metric,
                                    const std::vector<Eigen::VectorXd>& means) {
  if (means.size() < 2) throw std::invalid_argument("need at least two speakers");
  std::pair<int, int> best{0, 1};
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < static_cast<int>(means.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(means.size()); ++j) {
      const double value = PairSimilarity(model, metric, means[i], means[j]);
      if (value < best_value) {
        best_value = value;
        best = {i, j};
      }
    }
  }
  return best;
}

HeuristicInitResult HeuristicPairInit(const TwoCovPlda& model,
                                      const Embeddings& embeddings,
                                      const HeuristicInit& strategy) {
  strategy.Validate();
  const int num_segments = static_cast<int>(embeddings.rows());
  if (num_segments < 2) throw DataError("heuristic init needs at least 2 segments");
  constexpr int kProvisional = 3;

  VbOptions options;
  options.convergence.max_iterations = strategy.vb_iterations;
  // Early exit only at an exact fixed point, where more sweeps change nothing.
  options.convergence.q_tolerance = 0.0;

  HeuristicInitResult result;
  for (int attempt = 0; attempt < strategy.attempts; ++attempt) {
    const auto q = RandomInit(num_segments, kProvisional,
                              DeriveSeed(strategy.seed, static_cast<std::uint64_t>(attempt)));
    VbState state = RunVb(model, embeddings, q, options).state;
    if ((state.q.colwise().sum().array() < 1.0).any()) {
      result.degenerate_attempts.push_back(attempt);
    }
    for (int i = 0; i < kProvisional; ++i) {
      for (int j = i + 1; j < kProvisional; ++j) {
        result.candidates.push_back(
            {attempt, i, j,
             PairSimilarity(model, strategy.metric, state.speaker_means[i],
                            state.speaker_means[j])});
      }
    }
    result.attempt_states.push_back(std::move(state));
  }

  const PairCandidate* best = &result.candidates.front();
  for (const auto& candidate : result.candidates) {
    if (candidate.similarity < best->similarity) best = &candidate;
  }
  result.selected = *best;
  const VbState& chosen = result.attempt_states[best->attempt];
  for (int s : {best->first, best->second}) {
    result.speakers.means.push_back(chosen.speaker_means[s]);
    result.speakers.precisions.push_back(chosen.speaker_precisions[s]);
  }
  return result;
}

}  // namespace vbdiar

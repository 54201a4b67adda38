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

#ifndef VBDIAR_VB_H_
#define VBDIAR_VB_H_

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "vbdiar/plda.h"

namespace vbdiar {

// Mean-field posterior over speaker indicators and speaker vectors.
//   Q(I) = prod_m prod_s q_ms^i_ms,   Q(Y) = prod_s N(y_s | mu_s, C_s^-1)
struct VbState {
  Eigen::MatrixXd q;  // M x S, rows sum to 1
  std::vector<Eigen::VectorXd> speaker_means;       // mu_s
  std::vector<Eigen::MatrixXd> speaker_precisions;  // C_s
  double beta = 1.0;
  int iteration = 0;

  int num_segments() const { return static_cast<int>(q.rows()); }
  int num_speakers() const { return static_cast<int>(q.cols()); }
};

// Deterministic-annealing temperature schedule: beta starts at beta_init and
// is multiplied by `factor` after every sweep until it reaches beta_max.
struct AnnealSchedule {
  double beta_init = 0.2;
  double factor = 1.05;
  double beta_max = 1.0;

  // Throws std::invalid_argument unless 0 < beta_init <= beta_max <= 1 and
  // factor > 1.
  void Validate() const;
};

struct ConvergenceConfig {
  // Sweeps run at beta_max. Annealing sweeps are not counted.
  int max_iterations = 100;
  // Stop when max |q_new - q_old| <= q_tolerance after a full sweep. Zero
  // stops only at an exact fixed point.
  double q_tolerance = 1e-6;

  void Validate() const;
};

// Speaker posteriors used to start VB from the speaker factor.
struct SpeakerPosteriors {
  std::vector<Eigen::VectorXd> means;
  std::vector<Eigen::MatrixXd> precisions;
};

// A row-stochastic M x S matrix starts with the speaker update; speaker
// posteriors start with the segment update.
using VbInit = std::variant<Eigen::MatrixXd, SpeakerPosteriors>;

enum class VbStep { kSegment, kSpeaker };

struct VbTraceRecord {
  int iteration = 0;
  double beta = 1.0;
  double free_energy = 0.0;
  double max_q_delta = 0.0;
};

struct VbOptions {
  std::optional<AnnealSchedule> schedule;
  ConvergenceConfig convergence;
  // Uniform over the number of speakers when unset.
  std::optional<SpeakerPrior> prior;
  // Called after every coordinate update.
  std::function<void(const VbState&, VbStep)> observer;
  // Compute free energy per sweep and record a trace.
  bool record_trace = false;
};

struct VbResult {
  VbState state;
  bool converged = false;
  std::vector<VbTraceRecord> trace;
};

// Segment step: q_ms = softmax_s( beta * (mu_s' L phi_m
//   - 1/2 tr(L (C_s^-1 + mu_s mu_s'))) + log pi_s ).
// Throws NumericalError on non-finite values.
void UpdateSegmentPosteriors(const TwoCovPlda& model, const Embeddings& embeddings,
                             const SpeakerPrior& prior, VbState& state);

// Speaker step: C_s = beta (Lambda + sum_m q_ms L),
//   mu_s = C_s^-1 beta (Lambda mu + sum_m q_ms L phi_m).
// The two betas in mu_s cancel; means are computed from the unscaled
// precision so they do not depend on beta at all.
void UpdateSpeakerPosteriors(const TwoCovPlda& model, const Embeddings& embeddings,
                             VbState& state);

// Mean-field evidence lower bound at beta = 1,
// E_Q[log p(Phi, Y, I)] + H[Q]. Requires speaker posteriors to be present.
double FreeEnergy(const TwoCovPlda& model, const Embeddings& embeddings,
                  const SpeakerPrior& prior, const VbState& state);

// Alternates the two updates until q stops changing (or the iteration cap),
// annealing beta first when a schedule is given. Throws DataError on an init
// whose shape does not match the embeddings.
VbResult RunVb(const TwoCovPlda& model, const Embeddings& embeddings,
               const VbInit& init, const VbOptions& options = {});

// Per-segment argmax of q, ties to the lowest speaker index.
Assignment MapAssignment(const VbState& state);

}  // namespace vbdiar

#endif  // VBDIAR_VB_H_

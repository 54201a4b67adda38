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

#include "vbdiar/vb.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vbdiar/error.h"
#include "vbdiar/gaussian.h"

namespace vbdiar {

void AnnealSchedule::Validate() const {
  if (!(beta_init > 0.0 && beta_init <= beta_max && beta_max <= 1.0)) {
    throw std::invalid_argument("anneal schedule needs 0 < beta_init <= beta_max <= 1");
  }
  if (!(factor > 1.0)) throw std::invalid_argument("anneal factor must be > 1");
}

void ConvergenceConfig::Validate() const {
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (!(q_tolerance >= 0.0)) throw std::invalid_argument("q_tolerance must be >= 0");
}

void UpdateSegmentPosteriors(const TwoCovPlda& model, const Embeddings& embeddings,
                             const SpeakerPrior& prior, VbState& state) {
  const int num_speakers = static_cast<int>(state.speaker_means.size());
  if (prior.num_speakers() != num_speakers) {
    throw DataError("speaker prior size does not match the number of speakers");
  }
  const Eigen::MatrixXd& within = model.within_precision();
  const Eigen::Index num_segments = embeddings.rows();

  Eigen::MatrixXd scores(num_segments, num_speakers);
  for (int s = 0; s < num_speakers; ++s) {
    const Eigen::MatrixXd cov = SpdInverse(
        FactorizeSpd(state.speaker_precisions[s], "speaker posterior precision"));
    const Eigen::VectorXd& mean = state.speaker_means[s];
    const Eigen::VectorXd projected = within * mean;
    const double trace = within.cwiseProduct(cov).sum() + mean.dot(projected);
    scores.col(s) = (state.beta * ((embeddings * projected).array() - 0.5 * trace))
                        .matrix();
    scores.col(s).array() += prior.log_pi(s);
  }

  state.q.resize(num_segments, num_speakers);
  for (Eigen::Index m = 0; m < num_segments; ++m) {
    const double peak = scores.row(m).maxCoeff();
    if (!std::isfinite(peak)) {
      throw NumericalError("segment posterior scores are not finite");
    }
    const Eigen::RowVectorXd weights = (scores.row(m).array() - peak).exp().matrix();
    state.q.row(m) = weights / weights.sum();
  }
}

void UpdateSpeakerPosteriors(const TwoCovPlda& model, const Embeddings& embeddings,
                             VbState& state) {
  const int num_speakers = state.num_speakers();
  const Eigen::MatrixXd& lambda = model.between_precision();
  const Eigen::MatrixXd& within = model.within_precision();
  const Eigen::VectorXd lambda_mu = lambda * model.mu();
  const Eigen::RowVectorXd mass = state.q.colwise().sum();
  const Eigen::MatrixXd weighted_sums = embeddings.transpose() * state.q;  // D x S

  state.speaker_means.resize(num_speakers);
  state.speaker_precisions.resize(num_speakers);
  for (int s = 0; s < num_speakers; ++s) {
    const Eigen::MatrixXd precision = lambda + mass(s) * within;
    const auto llt = FactorizeSpd(precision, "speaker posterior precision");
    state.speaker_means[s] = llt.solve(lambda_mu + within * weighted_sums.col(s));
    state.speaker_precisions[s] = state.beta * precision;
  }
}

double FreeEnergy(const TwoCovPlda& model, const Embeddings& embeddings,
                  const SpeakerPrior& prior, const VbState& state) {
  const int num_speakers = state.num_speakers();
  if (static_cast<int>(state.speaker_means.size()) != num_speakers ||
      static_cast<int>(state.speaker_precisions.size()) != num_speakers) {
    throw DataError("free energy needs speaker posteriors for every speaker");
  }
  const double dim = model.dim();
  const Eigen::MatrixXd& lambda = model.between_precision();
  const Eigen::MatrixXd& within = model.within_precision();
  const double logdet_within = LogDet(model.within_precision_llt());
  const double logdet_lambda = LogDet(model.between_precision_llt());

  double energy = 0.0;
  for (int s = 0; s < num_speakers; ++s) {
    const auto llt = FactorizeSpd(state.speaker_precisions[s], "speaker posterior precision");
    const Eigen::MatrixXd cov = SpdInverse(llt);
    const Eigen::VectorXd& mean = state.speaker_means[s];

    // E[log N(phi_m; y_s, L^-1)] weighted by q_ms.
    const double within_trace = within.cwiseProduct(cov).sum();
    const Eigen::MatrixXd centered = embeddings.rowwise() - mean.transpose();
    const Eigen::VectorXd mahalanobis =
        (centered * within).cwiseProduct(centered).rowwise().sum();
    const Eigen::VectorXd expected_loglik =
        (-0.5 * (dim * kLog2Pi - logdet_within + within_trace + mahalanobis.array()))
            .matrix();
    energy += state.q.col(s).dot(expected_loglik);

    // E[log N(y_s; mu, Lambda^-1)] + H[N(mu_s, C_s^-1)].
    const Eigen::VectorXd offset = mean - model.mu();
    energy += -0.5 * (dim * kLog2Pi - logdet_lambda + offset.dot(lambda * offset) +
                      lambda.cwiseProduct(cov).sum());
    energy += 0.5 * dim * (1.0 + kLog2Pi) - 0.5 * LogDet(llt);

    for (Eigen::Index m = 0; m < state.q.rows(); ++m) {
      const double q = state.q(m, s);
      if (q > 0.0) energy += q * (prior.log_pi(s) - std::log(q));
    }
  }
  return energy;
}

namespace {

VbState StateFromInit(const TwoCovPlda& model, const Embeddings& embeddings,
                      const VbInit& init) {
  const Eigen::Index num_segments = embeddings.rows();
  VbState state;
  if (const auto* q = std::get_if<Eigen::MatrixXd>(&init)) {
    if (q->rows() != num_segments || q->cols() < 1) {
      throw DataError("initial q must be " + std::to_string(num_segments) +
                      " x S with S >= 1");
    }
    if (!q->allFinite() || q->minCoeff() < 0.0 ||
        ((q->rowwise().sum().array() - 1.0).abs() > 1e-9).any()) {
      throw DataError("initial q must be row-stochastic");
    }
    state.q = *q;
  } else {
    const auto& post = std::get<SpeakerPosteriors>(init);
    if (post.means.empty() || post.means.size() != post.precisions.size()) {
      throw DataError("initial speaker posteriors are empty or inconsistent");
    }
    for (std::size_t s = 0; s < post.means.size(); ++s) {
      if (post.means[s].size() != model.dim() ||
          post.precisions[s].rows() != model.dim() ||
          post.precisions[s].cols() != model.dim()) {
        throw DataError("initial speaker posterior dimension does not match the model");
      }
    }
    state.speaker_means = post.means;
    state.speaker_precisions = post.precisions;
    const auto num_speakers = static_cast<Eigen::Index>(post.means.size());
    state.q = Eigen::MatrixXd::Constant(num_segments, num_speakers,
                                        1.0 / static_cast<double>(num_speakers));
  }
  return state;
}

}  // namespace

VbResult RunVb(const TwoCovPlda& model, const Embeddings& embeddings,
               const VbInit& init, const VbOptions& options) {
  if (embeddings.cols() != model.dim()) {
    throw DataError("embedding dimension does not match the PLDA model");
  }
  if (embeddings.rows() < 1) throw DataError("conversation has no segments");
  options.convergence.Validate();
  if (options.schedule) options.schedule->Validate();

  VbResult result;
  VbState& state = result.state;
  state = StateFromInit(model, embeddings, init);
  const bool speaker_first = std::holds_alternative<Eigen::MatrixXd>(init);
  const SpeakerPrior prior = options.prior.value_or(SpeakerPrior(state.num_speakers()));
  if (prior.num_speakers() != state.num_speakers()) {
    throw DataError("speaker prior size does not match the initialization");
  }

  const double beta_max = options.schedule ? options.schedule->beta_max : 1.0;
  state.beta = options.schedule ? options.schedule->beta_init : 1.0;
  bool annealing = state.beta < beta_max;

  auto notify = [&](VbStep step) {
    if (options.observer) options.observer(state, step);
  };
  auto segment_step = [&] {
    UpdateSegmentPosteriors(model, embeddings, prior, state);
    notify(VbStep::kSegment);
  };
  auto speaker_step = [&] {
    UpdateSpeakerPosteriors(model, embeddings, state);
    notify(VbStep::kSpeaker);
  };

  Eigen::MatrixXd previous_q = state.q;
  int plain_sweeps = 0;
  while (true) {
    if (speaker_first) {
      speaker_step();
      segment_step();
    } else {
      segment_step();
      speaker_step();
    }
    ++state.iteration;
    const double delta = (state.q - previous_q).cwiseAbs().maxCoeff();
    previous_q = state.q;

    if (options.record_trace) {
      result.trace.push_back({state.iteration, state.beta,
                              FreeEnergy(model, embeddings, prior, state), delta});
    }

    if (annealing) {
      const double next = state.beta * options.schedule->factor;
      state.beta = next < beta_max ? next : beta_max;
      annealing = next < beta_max;
      continue;
    }
    ++plain_sweeps;
    if (delta <= options.convergence.q_tolerance) {
      result.converged = true;
      break;
    }
    if (plain_sweeps >= options.convergence.max_iterations) break;
  }
  return result;
}

Assignment MapAssignment(const VbState& state) {
  Assignment labels(state.q.rows());
  for (Eigen::Index m = 0; m < state.q.rows(); ++m) {
    int best = 0;
    for (int s = 1; s < state.q.cols(); ++s) {
      if (state.q(m, s) > state.q(m, best)) best = s;
    }
    labels[m] = best;
  }
  return labels;
}

}  // namespace vbdiar

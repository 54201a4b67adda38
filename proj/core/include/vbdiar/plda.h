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

#ifndef VBDIAR_PLDA_H_
#define VBDIAR_PLDA_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vbdiar {

// Segment embeddings of one conversation, one row per segment.
using Embeddings = Eigen::MatrixXd;

// Speaker index per segment.
using Assignment = std::vector<int>;

// Two-covariance PLDA model. A speaker vector y is drawn from N(mu, B) with
// B = between_precision^-1, and an observation is y + e with e ~ N(0, W),
// W = within_precision^-1.
//
// Immutable after construction; derived covariances and their Cholesky
// factors are computed once in the constructor.
class TwoCovPlda {
 public:
  // Throws DataError when dimensions disagree or a precision matrix is not
  // symmetric (1e-10 relative) positive-definite.
  TwoCovPlda(Eigen::VectorXd mu, Eigen::MatrixXd between_precision,
             Eigen::MatrixXd within_precision);

  // Builds the model from covariances instead of precisions.
  static TwoCovPlda FromCovariances(Eigen::VectorXd mu,
                                    const Eigen::MatrixXd& between_covariance,
                                    const Eigen::MatrixXd& within_covariance);

  int dim() const { return static_cast<int>(mu_.size()); }
  const Eigen::VectorXd& mu() const { return mu_; }
  const Eigen::MatrixXd& between_precision() const { return between_precision_; }
  const Eigen::MatrixXd& within_precision() const { return within_precision_; }
  const Eigen::MatrixXd& between_covariance() const { return between_cov_; }
  const Eigen::MatrixXd& within_covariance() const { return within_cov_; }

  const Eigen::LLT<Eigen::MatrixXd>& between_precision_llt() const { return between_prec_llt_; }
  const Eigen::LLT<Eigen::MatrixXd>& within_precision_llt() const { return within_prec_llt_; }

  // Factor of B + W, the marginal covariance of a single observation.
  const Eigen::LLT<Eigen::MatrixXd>& total_covariance_llt() const { return total_cov_llt_; }

 private:
  friend double LlrSameSpeaker(const TwoCovPlda&, const Eigen::VectorXd&,
                               const Eigen::VectorXd&);

  Eigen::VectorXd mu_;
  Eigen::MatrixXd between_precision_;
  Eigen::MatrixXd within_precision_;
  Eigen::MatrixXd between_cov_;
  Eigen::MatrixXd within_cov_;
  Eigen::LLT<Eigen::MatrixXd> between_prec_llt_;
  Eigen::LLT<Eigen::MatrixXd> within_prec_llt_;
  Eigen::LLT<Eigen::MatrixXd> total_cov_llt_;
  // Factors of 2(2B + W) and 2W, the covariances of x1 + x2 and x1 - x2 for a
  // same-speaker pair (centered).
  Eigen::LLT<Eigen::MatrixXd> pair_sum_cov_llt_;
  Eigen::LLT<Eigen::MatrixXd> pair_diff_cov_llt_;
};

// Prior probability that a given speaker talks in a segment.
class SpeakerPrior {
 public:
  // Uniform prior, pi_s = 1/S.
  explicit SpeakerPrior(int num_speakers);
  // Throws std::invalid_argument unless entries are >= 0 and sum to 1
  // within 1e-12.
  explicit SpeakerPrior(std::vector<double> pi);

  int num_speakers() const { return static_cast<int>(pi_.size()); }
  const std::vector<double>& pi() const { return pi_; }
  double log_pi(int s) const;

 private:
  std::vector<double> pi_;
};

struct SampledConversation {
  Embeddings embeddings;  // M x D
  Assignment labels;      // speaker index per segment
  Eigen::MatrixXd speaker_vectors;  // S x D, the drawn y_s
};

// Draws one conversation from the generative model: one y_s per speaker for
// the whole conversation, then per segment a speaker label from the prior and
// a fresh residual. `residual_scales`, when given, multiplies the residual
// covariance of each segment (size must equal num_segments).
SampledConversation SampleConversation(
    const TwoCovPlda& model, const SpeakerPrior& prior, int num_segments,
    std::uint64_t seed, const std::vector<double>* residual_scales = nullptr);

// log p(x1, x2 | same speaker) - log p(x1) - log p(x2). Exactly symmetric in
// its vector arguments. Throws DataError on dimension mismatch.
double LlrSameSpeaker(const TwoCovPlda& model, const Eigen::VectorXd& x1,
                      const Eigen::VectorXd& x2);

// log of the integral over all speaker vectors of p(embeddings, Y | assignment).
// Speakers without segments contribute zero. Throws DataError on a dimension
// mismatch or a negative speaker index.
double MarginalLogLikelihood(const TwoCovPlda& model,
                             const Embeddings& embeddings,
                             const Assignment& assignment);

// Closed-form log-likelihood of `count` observations sharing one speaker,
// given their sum and the sum of their squared Mahalanobis norms under the
// within-class precision (sum_j x_j' L x_j).
double SpeakerGroupLogLikelihood(const TwoCovPlda& model, int count,
                                 const Eigen::VectorXd& sum,
                                 double within_quadratic_sum);

struct LabeledVector {
  std::string speaker;
  Eigen::VectorXd vector;
};

struct EmOptions {
  int iterations = 10;
  // Start from these parameters instead of the method-of-moments estimate.
  std::optional<TwoCovPlda> initial;
};

struct EmResult {
  TwoCovPlda model;
  // Observed-data log-likelihood of the starting point followed by one entry
  // per iteration.
  std::vector<double> log_likelihood;
  std::vector<std::string> warnings;
};

// EM for the two-covariance model. Requires at least two speakers with at
// least two vectors each.
EmResult TrainEm(const std::vector<LabeledVector>& data,
                 const EmOptions& options);

}  // namespace vbdiar

#endif  // VBDIAR_PLDA_H_

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

#include "vbdiar/plda.h"

#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "vbdiar/error.h"
#include "vbdiar/gaussian.h"
#include "vbdiar/random.h"

namespace vbdiar {
namespace {

void CheckPrecision(const Eigen::MatrixXd& precision, int dim, const char* name) {
  if (precision.rows() != dim || precision.cols() != dim) {
    throw DataError(std::string(name) + " must be " + std::to_string(dim) + "x" +
                    std::to_string(dim));
  }
  if (!precision.allFinite() || !IsSymmetric(precision, 1e-10)) {
    throw DataError(std::string(name) + " is not symmetric");
  }
}

Eigen::LLT<Eigen::MatrixXd> FactorizeOrDataError(const Eigen::MatrixXd& m,
                                                 const char* name) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw DataError(std::string(name) + " is not positive-definite");
  }
  return llt;
}

Eigen::VectorXd StandardNormalVector(int dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd z(dim);
  for (int i = 0; i < dim; ++i) z(i) = normal(rng);
  return z;
}

}  // namespace

TwoCovPlda::TwoCovPlda(Eigen::VectorXd mu, Eigen::MatrixXd between_precision,
                       Eigen::MatrixXd within_precision)
    : mu_(std::move(mu)),
      between_precision_(std::move(between_precision)),
      within_precision_(std::move(within_precision)) {
  const int d = dim();
  if (d <= 0) throw DataError("PLDA dimension must be positive");
  if (!mu_.allFinite()) throw DataError("PLDA mean is not finite");
  CheckPrecision(between_precision_, d, "between_precision");
  CheckPrecision(within_precision_, d, "within_precision");
  between_prec_llt_ = FactorizeOrDataError(between_precision_, "between_precision");
  within_prec_llt_ = FactorizeOrDataError(within_precision_, "within_precision");
  between_cov_ = SpdInverse(between_prec_llt_);
  within_cov_ = SpdInverse(within_prec_llt_);
  total_cov_llt_ = FactorizeSpd(between_cov_ + within_cov_, "B + W");
  pair_sum_cov_llt_ = FactorizeSpd(2.0 * (2.0 * between_cov_ + within_cov_), "2(2B + W)");
  pair_diff_cov_llt_ = FactorizeSpd(2.0 * within_cov_, "2W");
}

TwoCovPlda TwoCovPlda::FromCovariances(Eigen::VectorXd mu,
                                       const Eigen::MatrixXd& between_covariance,
                                       const Eigen::MatrixXd& within_covariance) {
  return TwoCovPlda(
      std::move(mu),
      SpdInverse(FactorizeOrDataError(between_covariance, "between_covariance")),
      SpdInverse(FactorizeOrDataError(within_covariance, "within_covariance")));
}

SpeakerPrior::SpeakerPrior(int num_speakers) {
  if (num_speakers <= 0) {
    throw std::invalid_argument("number of speakers must be positive");
  }
  pi_.assign(num_speakers, 1.0 / num_speakers);
}

SpeakerPrior::SpeakerPrior(std::vector<double> pi) : pi_(std::move(pi)) {
  if (pi_.empty()) throw std::invalid_argument("speaker prior is empty");
  double total = 0.0;
  for (double p : pi_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("speaker prior entries must be >= 0");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("speaker prior must sum to 1");
  }
}

double SpeakerPrior::log_pi(int s) const { return std::log(pi_.at(s)); }

SampledConversation SampleConversation(const TwoCovPlda& model,
                                       const SpeakerPrior& prior,
                                       int num_segments, std::uint64_t seed,
                                       const std::vector<double>* residual_scales) {
  if (num_segments < 1) throw std::invalid_argument("num_segments must be >= 1");
  if (residual_scales != nullptr &&
      static_cast<int>(residual_scales->size()) != num_segments) {
    throw std::invalid_argument("residual_scales must have one entry per segment");
  }
  const int dim = model.dim();
  const int num_speakers = prior.num_speakers();
  Rng rng(seed);

  SampledConversation out;
  out.speaker_vectors.resize(num_speakers, dim);
  // y = mu + U^-1 z with between_precision = U'U gives cov(y) = B.
  for (int s = 0; s < num_speakers; ++s) {
    const Eigen::VectorXd z = StandardNormalVector(dim, rng);
    out.speaker_vectors.row(s) =
        (model.mu() + model.between_precision_llt().matrixU().solve(z)).transpose();
  }

  std::discrete_distribution<int> pick(prior.pi().begin(), prior.pi().end());
  out.embeddings.resize(num_segments, dim);
  out.labels.resize(num_segments);
  for (int m = 0; m < num_segments; ++m) {
    const int k = pick(rng);
    Eigen::VectorXd residual =
        model.within_precision_llt().matrixU().solve(StandardNormalVector(dim, rng));
    if (residual_scales != nullptr) residual *= std::sqrt((*residual_scales)[m]);
    out.labels[m] = k;
    out.embeddings.row(m) = out.speaker_vectors.row(k) + residual.transpose();
  }
  return out;
}

double LlrSameSpeaker(const TwoCovPlda& model, const Eigen::VectorXd& x1,
                      const Eigen::VectorXd& x2) {
  const int dim = model.dim();
  if (x1.size() != dim || x2.size() != dim) {
    throw DataError("LLR input dimension does not match the PLDA model");
  }
  // In (x1 + x2, x1 - x2) coordinates the same-speaker joint factorizes into
  // two independent Gaussians; the Jacobian contributes D log 2. Every step is
  // invariant to swapping x1 and x2 in floating point.
  const Eigen::VectorXd c1 = x1 - model.mu_;
  const Eigen::VectorXd c2 = x2 - model.mu_;
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(dim);
  const double joint = LogGaussianDensity(c1 + c2, zero, model.pair_sum_cov_llt_) +
                       LogGaussianDensity(c1 - c2, zero, model.pair_diff_cov_llt_) +
                       dim * std::log(2.0);
  const double marginals = LogGaussianDensity(c1, zero, model.total_cov_llt_) +
                           LogGaussianDensity(c2, zero, model.total_cov_llt_);
  return joint - marginals;
}

double SpeakerGroupLogLikelihood(const TwoCovPlda& model, int count,
                                 const Eigen::VectorXd& sum,
                                 double within_quadratic_sum) {
  if (count == 0) return 0.0;
  const int dim = model.dim();
  const Eigen::MatrixXd& lambda = model.between_precision();
  const Eigen::MatrixXd& within = model.within_precision();
  const Eigen::MatrixXd posterior_precision = lambda + count * within;
  const auto post_llt = FactorizeSpd(posterior_precision, "speaker posterior precision");
  const Eigen::VectorXd lambda_mu = lambda * model.mu();
  const Eigen::VectorXd b = lambda_mu + within * sum;
  const Eigen::VectorXd half_solved = post_llt.matrixL().solve(b);
  const double quadratic = model.mu().dot(lambda_mu) + within_quadratic_sum -
                           half_solved.squaredNorm();
  return -0.5 * count * dim * kLog2Pi + 0.5 * LogDet(model.between_precision_llt()) +
         0.5 * count * LogDet(model.within_precision_llt()) -
         0.5 * LogDet(post_llt) - 0.5 * quadratic;
}

double MarginalLogLikelihood(const TwoCovPlda& model, const Embeddings& embeddings,
                             const Assignment& assignment) {
  if (embeddings.cols() != model.dim()) {
    throw DataError("embedding dimension does not match the PLDA model");
  }
  if (static_cast<Eigen::Index>(assignment.size()) != embeddings.rows()) {
    throw DataError("assignment length does not match the number of segments");
  }
  std::map<int, std::pair<int, Eigen::VectorXd>> groups;
  std::map<int, double> quad;
  for (std::size_t m = 0; m < assignment.size(); ++m) {
    const int s = assignment[m];
    if (s < 0) throw DataError("speaker index must be non-negative");
    const Eigen::VectorXd x = embeddings.row(static_cast<Eigen::Index>(m)).transpose();
    auto [it, inserted] =
        groups.try_emplace(s, 0, Eigen::VectorXd::Zero(model.dim()));
    it->second.first += 1;
    it->second.second += x;
    quad[s] += x.dot(model.within_precision() * x);
  }
  double total = 0.0;
  for (const auto& [s, group] : groups) {
    total += SpeakerGroupLogLikelihood(model, group.first, group.second, quad[s]);
  }
  return total;
}

namespace {

struct SpeakerStats {
  int count = 0;
  Eigen::VectorXd sum;
};

double ObservedLogLikelihood(const TwoCovPlda& model,
                             const std::vector<SpeakerStats>& speakers,
                             const Eigen::MatrixXd& total_scatter) {
  double ll = 0.0;
  for (const auto& spk : speakers) {
    ll += SpeakerGroupLogLikelihood(model, spk.count, spk.sum, 0.0);
  }
  // sum_ij x' L x, split out of the per-speaker terms.
  return ll - 0.5 * (model.within_precision().cwiseProduct(total_scatter)).sum();
}

}  // namespace

EmResult TrainEm(const std::vector<LabeledVector>& data, const EmOptions& options) {
  if (options.iterations < 1) {
    throw std::invalid_argument("EM iterations must be >= 1");
  }
  if (data.empty()) throw DataError("EM training set is empty");
  const auto dim = data.front().vector.size();
  if (dim == 0) throw DataError("training vectors are empty");

  std::unordered_map<std::string, std::size_t> index;
  std::vector<SpeakerStats> speakers;
  Eigen::MatrixXd total_scatter = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd total_sum = Eigen::VectorXd::Zero(dim);
  for (const auto& item : data) {
    if (item.vector.size() != dim) {
      throw DataError("training vectors have inconsistent dimensions");
    }
    if (!item.vector.allFinite()) throw DataError("training vector is not finite");
    auto [it, inserted] = index.try_emplace(item.speaker, speakers.size());
    if (inserted) speakers.push_back({0, Eigen::VectorXd::Zero(dim)});
    auto& spk = speakers[it->second];
    spk.count += 1;
    spk.sum += item.vector;
    total_scatter.noalias() += item.vector * item.vector.transpose();
    total_sum += item.vector;
  }
  if (speakers.size() < 2) {
    throw DataError("EM training needs at least 2 speakers, got " +
                    std::to_string(speakers.size()));
  }
  for (const auto& [name, i] : index) {
    if (speakers[i].count < 2) {
      throw DataError("speaker '" + name + "' has fewer than 2 vectors");
    }
  }

  const double num_vectors = static_cast<double>(data.size());
  const double num_speakers = static_cast<double>(speakers.size());
  std::vector<std::string> warnings;

  auto make_model = [&](Eigen::VectorXd mu, Eigen::MatrixXd between,
                        Eigen::MatrixXd within) {
    between = 0.5 * (between + between.transpose());
    within = 0.5 * (within + within.transpose());
    RegularizeScatter(between, "between-class scatter", warnings);
    RegularizeScatter(within, "within-class scatter", warnings);
    return TwoCovPlda::FromCovariances(std::move(mu), between, within);
  };

  TwoCovPlda model = [&] {
    if (options.initial.has_value()) {
      if (options.initial->dim() != dim) {
        throw DataError("initial model dimension does not match training data");
      }
      return *options.initial;
    }
    const Eigen::VectorXd global_mean = total_sum / num_vectors;
    Eigen::MatrixXd between = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd mean_scatter = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& spk : speakers) {
      const Eigen::VectorXd mean = spk.sum / spk.count;
      const Eigen::VectorXd centered = mean - global_mean;
      between.noalias() += centered * centered.transpose();
      mean_scatter.noalias() += spk.count * mean * mean.transpose();
    }
    between /= num_speakers;
    Eigen::MatrixXd within = (total_scatter - mean_scatter) / num_vectors;
    return make_model(global_mean, between, within);
  }();

  std::vector<double> history;
  history.push_back(ObservedLogLikelihood(model, speakers, total_scatter));

  for (int iter = 0; iter < options.iterations; ++iter) {
    // Posterior precision depends only on the vector count.
    std::map<int, std::pair<Eigen::LLT<Eigen::MatrixXd>, Eigen::MatrixXd>> by_count;
    for (const auto& spk : speakers) {
      if (by_count.contains(spk.count)) continue;
      auto llt = FactorizeSpd(
          model.between_precision() + spk.count * model.within_precision(),
          "speaker posterior precision");
      Eigen::MatrixXd cov = SpdInverse(llt);
      by_count.emplace(spk.count, std::make_pair(std::move(llt), std::move(cov)));
    }

    const Eigen::VectorXd lambda_mu = model.between_precision() * model.mu();
    std::vector<Eigen::VectorXd> posterior_means;
    posterior_means.reserve(speakers.size());
    Eigen::VectorXd mu_new = Eigen::VectorXd::Zero(dim);
    for (const auto& spk : speakers) {
      const auto& llt = by_count.at(spk.count).first;
      posterior_means.push_back(
          llt.solve(lambda_mu + model.within_precision() * spk.sum));
      mu_new += posterior_means.back();
    }
    mu_new /= num_speakers;

    Eigen::MatrixXd between = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd within = total_scatter;
    for (std::size_t i = 0; i < speakers.size(); ++i) {
      const auto& spk = speakers[i];
      const auto& post_cov = by_count.at(spk.count).second;
      const Eigen::VectorXd& y = posterior_means[i];
      const Eigen::VectorXd centered = y - mu_new;
      between.noalias() += centered * centered.transpose();
      between += post_cov;
      const Eigen::MatrixXd cross = spk.sum * y.transpose();
      within -= cross + cross.transpose();
      within.noalias() += spk.count * (y * y.transpose());
      within += spk.count * post_cov;
    }
    between /= num_speakers;
    within /= num_vectors;
    model = make_model(mu_new, between, within);
    history.push_back(ObservedLogLikelihood(model, speakers, total_scatter));
  }
  return EmResult{std::move(model), std::move(history), std::move(warnings)};
}

}  // namespace vbdiar

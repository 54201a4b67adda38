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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles/oracles.h"
#include "test_util.h"
#include "vbdiar/error.h"
#include "vbdiar/random.h"
#include "vbdiar/synth.h"

namespace vbdiar {
namespace {

TEST(TwoCovPldaTest, RejectsAsymmetricAndIndefinitePrecisions) {
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 0.5, 0, 1;
  EXPECT_THROW(TwoCovPlda(Eigen::VectorXd::Zero(2), asym, Eigen::MatrixXd::Identity(2, 2)),
               DataError);
  Eigen::MatrixXd indefinite(2, 2);
  indefinite << 1, 2, 2, 1;
  EXPECT_THROW(
      TwoCovPlda(Eigen::VectorXd::Zero(2), Eigen::MatrixXd::Identity(2, 2), indefinite),
      DataError);
  EXPECT_THROW(TwoCovPlda(Eigen::VectorXd::Zero(3), Eigen::MatrixXd::Identity(2, 2),
                          Eigen::MatrixXd::Identity(2, 2)),
               DataError);
}

TEST(TwoCovPldaTest, CovariancesInvertPrecisions) {
  const auto model = testing_util::RandomModel(4, 11);
  EXPECT_TRUE((model.between_covariance() * model.between_precision())
                  .isApprox(Eigen::MatrixXd::Identity(4, 4), 1e-10));
  EXPECT_TRUE((model.within_covariance() * model.within_precision())
                  .isApprox(Eigen::MatrixXd::Identity(4, 4), 1e-10));
}

TEST(SpeakerPriorTest, UniformAndValidation) {
  const SpeakerPrior uniform(4);
  for (double p : uniform.pi()) EXPECT_DOUBLE_EQ(p, 0.25);
  EXPECT_THROW(SpeakerPrior(std::vector<double>{0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(SpeakerPrior(std::vector<double>{1.5, -0.5}), std::invalid_argument);
  EXPECT_THROW(SpeakerPrior(0), std::invalid_argument);
  EXPECT_NO_THROW(SpeakerPrior(std::vector<double>{1.0, 0.0}));
}

TEST(SampleConversationTest, DegeneratePriorGivesOneSpeaker) {
  const auto model = IsotropicModel(3);
  const auto conv = SampleConversation(model, SpeakerPrior({1.0, 0.0}), 50, 3);
  for (int label : conv.labels) EXPECT_EQ(label, 0);
}

TEST(SampleConversationTest, SeededDeterminism) {
  const auto model = testing_util::RandomModel(3, 5);
  const auto a = SampleConversation(model, SpeakerPrior(2), 30, 99);
  const auto b = SampleConversation(model, SpeakerPrior(2), 30, 99);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_TRUE(a.embeddings == b.embeddings);
  const auto c = SampleConversation(model, SpeakerPrior(2), 30, 100);
  EXPECT_FALSE(a.embeddings == c.embeddings);
}

TEST(SampleConversationTest, SpeakerVectorIsSharedAcrossSegments) {
  // Within one conversation the spread around y_s is the residual alone.
  Eigen::MatrixXd w(2, 2);
  w << 0.5, 0.1, 0.1, 0.3;
  const auto model =
      TwoCovPlda::FromCovariances(Eigen::VectorXd::Zero(2), Eigen::MatrixXd::Identity(2, 2), w);
  const auto conv = SampleConversation(model, SpeakerPrior(1), 20000, 8);
  Eigen::MatrixXd centered = conv.embeddings.rowwise() - conv.speaker_vectors.row(0);
  const Eigen::MatrixXd cov = centered.transpose() * centered / 20000.0;
  EXPECT_LT(oracle::FrobeniusRelative(cov, w), 0.1);
}

TEST(SampleConversationTest, MarginalCovarianceAcrossConversations) {
  // One segment from each of many conversations: covariance B + W = 2I.
  const auto model = IsotropicModel(2);
  Eigen::MatrixXd rows(10000, 2);
  for (int i = 0; i < 10000; ++i) {
    rows.row(i) = SampleConversation(model, SpeakerPrior(1), 1, DeriveSeed(4, i)).embeddings;
  }
  Eigen::MatrixXd centered = rows.rowwise() - rows.colwise().mean();
  const Eigen::MatrixXd cov = centered.transpose() * centered / 10000.0;
  EXPECT_LT(oracle::FrobeniusRelative(cov, 2.0 * Eigen::MatrixXd::Identity(2, 2)), 0.1);
}

TEST(LlrTest, OneDimensionalClosedForm) {
  const auto model = IsotropicModel(1);
  Eigen::MatrixXd joint(2, 2);
  joint << 2, 1, 1, 2;
  const double expected =
      oracle::LogNormal(Eigen::VectorXd::Zero(2), Eigen::VectorXd::Zero(2), joint) -
      2.0 * oracle::LogNormal(Eigen::VectorXd::Zero(1), Eigen::VectorXd::Zero(1),
                              2.0 * Eigen::MatrixXd::Identity(1, 1));
  EXPECT_NEAR(LlrSameSpeaker(model, Eigen::VectorXd::Zero(1), Eigen::VectorXd::Zero(1)),
              expected, 1e-12);
}

TEST(LlrTest, MatchesJointDensityOracle) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> n01;
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 4;
    const auto model = testing_util::RandomModel(d, 100 + trial);
    Eigen::VectorXd x1(d), x2(d);
    for (int i = 0; i < d; ++i) {
      x1(i) = 2 * n01(rng);
      x2(i) = 2 * n01(rng);
    }
    Embeddings pair(2, d);
    pair.row(0) = x1;
    pair.row(1) = x2;
    const double same = oracle::DenseJointLogLikelihood(model, pair, {0, 0});
    const double apart = oracle::DenseJointLogLikelihood(model, pair, {0, 1});
    EXPECT_NEAR(LlrSameSpeaker(model, x1, x2), same - apart, 1e-9 * (1 + std::abs(same)));
  }
}

TEST(LlrTest, ExactlySymmetricAndTranslationInvariant) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> n01;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + trial % 5;
    const auto model = testing_util::RandomModel(d, 200 + trial);
    Eigen::VectorXd x1(d), x2(d), shift(d);
    for (int i = 0; i < d; ++i) {
      x1(i) = 3 * n01(rng);
      x2(i) = 3 * n01(rng);
      shift(i) = 5 * n01(rng);
    }
    EXPECT_EQ(LlrSameSpeaker(model, x1, x2), LlrSameSpeaker(model, x2, x1));
    const TwoCovPlda moved(model.mu() + shift, model.between_precision(),
                           model.within_precision());
    EXPECT_NEAR(LlrSameSpeaker(moved, x1 + shift, x2 + shift), LlrSameSpeaker(model, x1, x2),
                1e-9);
  }
}

TEST(LlrTest, SameSpeakerPairsScoreHigher) {
  const auto model = testing_util::RandomModel(4, 31);
  double same = 0, different = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto conv = SampleConversation(model, SpeakerPrior(1), 2, DeriveSeed(31, i));
    same += LlrSameSpeaker(model, conv.embeddings.row(0), conv.embeddings.row(1));
    const auto other = SampleConversation(model, SpeakerPrior(1), 1, DeriveSeed(32, i));
    different += LlrSameSpeaker(model, conv.embeddings.row(0), other.embeddings.row(0));
  }
  EXPECT_GT(same / 1000, different / 1000);
}

TEST(LlrTest, DimensionMismatch) {
  EXPECT_THROW(LlrSameSpeaker(IsotropicModel(2), Eigen::VectorXd::Zero(2),
                              Eigen::VectorXd::Zero(3)),
               DataError);
}

TEST(MarginalLogLikelihoodTest, SingleSegment) {
  const auto model = testing_util::RandomModel(3, 41);
  Embeddings x(1, 3);
  x << 0.3, -1.2, 2.0;
  const Eigen::MatrixXd total = model.between_covariance() + model.within_covariance();
  EXPECT_NEAR(MarginalLogLikelihood(model, x, {0}),
              oracle::LogNormal(x.row(0).transpose(), model.mu(), total), 1e-10);
}

TEST(MarginalLogLikelihoodTest, MatchesDenseJointForAllAssignments) {
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 1 + trial % 3;
    const auto model = testing_util::RandomModel(d, 300 + trial);
    const auto conv = SampleConversation(model, SpeakerPrior(3), 4, 300 + trial);
    oracle::ForEachAssignment(4, 3, [&](const Assignment& a) {
      const double dense = oracle::DenseJointLogLikelihood(model, conv.embeddings, a);
      EXPECT_NEAR(MarginalLogLikelihood(model, conv.embeddings, a), dense,
                  1e-9 * (1 + std::abs(dense)));
    });
  }
}

TEST(MarginalLogLikelihoodTest, LabelPermutationInvariant) {
  const auto model = testing_util::RandomModel(2, 51);
  const auto conv = SampleConversation(model, SpeakerPrior(3), 7, 51);
  const Assignment a = {0, 1, 2, 0, 1, 2, 2};
  const Assignment permuted = {2, 0, 1, 2, 0, 1, 1};
  EXPECT_NEAR(MarginalLogLikelihood(model, conv.embeddings, a),
              MarginalLogLikelihood(model, conv.embeddings, permuted), 1e-10);
}

TEST(MarginalLogLikelihoodTest, EvidenceMatchesQuadrature) {
  // D = 1, M = 2: sum over the 4 assignments against 2-D numerical integration.
  for (int trial = 0; trial < 5; ++trial) {
    const auto model = testing_util::RandomModel(1, 400 + trial);
    const auto conv = SampleConversation(model, SpeakerPrior(2), 2, 400 + trial);
    const std::vector<double> pi = {0.3, 0.7};
    double total = 0;
    oracle::ForEachAssignment(2, 2, [&](const Assignment& a) {
      total += std::exp(MarginalLogLikelihood(model, conv.embeddings, a) + std::log(pi[a[0]]) +
                        std::log(pi[a[1]]));
    });
    const double quadrature = oracle::QuadratureEvidence1d(model, conv.embeddings, pi, 12, 1601);
    EXPECT_NEAR(std::log(total), quadrature, 1e-6 * std::abs(quadrature) + 1e-9);
  }
}

TEST(MarginalLogLikelihoodTest, Errors) {
  const auto model = IsotropicModel(2);
  EXPECT_THROW(MarginalLogLikelihood(model, Embeddings::Zero(2, 3), {0, 1}), DataError);
  EXPECT_THROW(MarginalLogLikelihood(model, Embeddings::Zero(2, 2), {0, -1}), DataError);
}

std::vector<LabeledVector> SampleTrainingSet(const TwoCovPlda& model, int speakers, int cuts,
                                             std::uint64_t seed) {
  std::vector<LabeledVector> data;
  for (int s = 0; s < speakers; ++s) {
    const auto conv = SampleConversation(model, SpeakerPrior(1), cuts, DeriveSeed(seed, s));
    for (int c = 0; c < cuts; ++c) {
      data.push_back({"s" + std::to_string(s), conv.embeddings.row(c).transpose()});
    }
  }
  return data;
}

TEST(TrainEmTest, RecoversGeneratingModel) {
  const auto truth = testing_util::RandomModel(5, 61);
  const auto data = SampleTrainingSet(truth, 1000, 10, 61);
  EmOptions options;
  options.iterations = 30;
  const auto result = TrainEm(data, options);
  EXPECT_EQ(result.model.dim(), 5);
  EXPECT_LT(oracle::FrobeniusRelative(result.model.between_covariance(),
                                      truth.between_covariance()),
            0.1);
  EXPECT_LT(oracle::FrobeniusRelative(result.model.within_covariance(),
                                      truth.within_covariance()),
            0.1);
  ASSERT_EQ(result.log_likelihood.size(), 31u);
  for (std::size_t i = 1; i < result.log_likelihood.size(); ++i) {
    EXPECT_GE(result.log_likelihood[i] - result.log_likelihood[i - 1], -1e-8);
  }
}

TEST(TrainEmTest, LogLikelihoodMatchesMarginal) {
  const auto truth = testing_util::RandomModel(2, 62);
  const auto data = SampleTrainingSet(truth, 5, 3, 62);
  EmOptions options;
  options.iterations = 1;
  options.initial = truth;
  const auto result = TrainEm(data, options);
  Embeddings rows(15, 2);
  Assignment labels(15);
  for (int i = 0; i < 15; ++i) {
    rows.row(i) = data[i].vector;
    labels[i] = i / 3;
  }
  EXPECT_NEAR(result.log_likelihood[0], MarginalLogLikelihood(truth, rows, labels), 1e-8);
}

TEST(TrainEmTest, MonotoneFromGeneratingParameters) {
  const auto truth = testing_util::RandomModel(3, 63);
  const auto data = SampleTrainingSet(truth, 200, 5, 63);
  EmOptions options;
  options.iterations = 5;
  options.initial = truth;
  const auto result = TrainEm(data, options);
  for (std::size_t i = 1; i < result.log_likelihood.size(); ++i) {
    EXPECT_GE(result.log_likelihood[i] - result.log_likelihood[i - 1], -1e-8);
  }
}

TEST(TrainEmTest, Errors) {
  const auto model = IsotropicModel(2);
  EmOptions options;
  EXPECT_THROW(TrainEm(SampleTrainingSet(model, 1, 5, 1), options), DataError);
  auto one_each = SampleTrainingSet(model, 3, 1, 1);
  EXPECT_THROW(TrainEm(one_each, options), DataError);
  options.iterations = 0;
  EXPECT_THROW(TrainEm(SampleTrainingSet(model, 3, 3, 1), options), std::invalid_argument);
}

TEST(TrainEmTest, RidgesDegenerateWithinScatter) {
  // Every cut identical to its speaker vector: zero within-speaker scatter in
  // one direction.
  std::vector<LabeledVector> data;
  for (int s = 0; s < 20; ++s) {
    for (int c = 0; c < 3; ++c) {
      Eigen::VectorXd v(2);
      v << s + 0.1 * c, 0.0;
      data.push_back({"s" + std::to_string(s), v});
    }
  }
  EmOptions options;
  options.iterations = 2;
  const auto result = TrainEm(data, options);
  EXPECT_FALSE(result.warnings.empty());
}

}  // namespace
}  // namespace vbdiar

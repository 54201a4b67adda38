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

#include "vbdiar/preprocess.h"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "vbdiar/error.h"
#include "vbdiar/json_io.h"
#include "vbdiar/synth.h"

namespace vbdiar {
namespace {

TEST(ProjectionPipelineTest, IdentityWithLengthNorm) {
  Eigen::VectorXd x(2);
  x << 3, 4;
  const auto y = ProjectionPipeline::Identity(2, true).Apply(x);
  EXPECT_DOUBLE_EQ(y(0), 0.6);
  EXPECT_DOUBLE_EQ(y(1), 0.8);
  EXPECT_TRUE(ProjectionPipeline::Identity(2, false).Apply(x) == x);
  EXPECT_THROW(ProjectionPipeline::Identity(3, true).Apply(x), DataError);
}

TEST(FitLdaTest, TwoClassDirectionMatchesClosedForm) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n01;
  std::vector<LabeledVector> data;
  for (int i = 0; i < 10000; ++i) {
    Eigen::VectorXd v(2);
    v << (i % 2 ? 1.0 : -1.0) + n01(rng), n01(rng);
    data.push_back({i % 2 ? "a" : "b", v});
  }
  const Eigen::MatrixXd lda = FitLda(data, 1);
  ASSERT_EQ(lda.rows(), 1);
  // Closed form: S_w^-1 (m1 - m2), recomputed here from the sample.
  Eigen::Vector2d m[2] = {Eigen::Vector2d::Zero(), Eigen::Vector2d::Zero()};
  for (int i = 0; i < 10000; ++i) m[i % 2] += data[i].vector / 5000.0;
  Eigen::Matrix2d sw = Eigen::Matrix2d::Zero();
  for (int i = 0; i < 10000; ++i) {
    const Eigen::Vector2d r = data[i].vector - m[i % 2];
    sw += r * r.transpose();
  }
  const Eigen::Vector2d direction = (sw.inverse() * (m[1] - m[0])).normalized();
  const double cosine = std::abs(lda.row(0).dot(direction)) / lda.row(0).norm();
  EXPECT_LT(std::acos(std::min(1.0, cosine)), 1e-3);
  EXPECT_LT(std::acos(std::min(1.0, std::abs(lda(0, 0)) / lda.row(0).norm())), 0.05);
}

TEST(FitLdaTest, FullRankWithIsotropicClassesIsOrthonormal) {
  // Each class is its mean plus/minus every unit axis, so the within-class
  // scatter is exactly proportional to the identity.
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n01;
  std::vector<LabeledVector> data;
  for (int c = 0; c < 5; ++c) {
    Eigen::VectorXd mean(3);
    for (int i = 0; i < 3; ++i) mean(i) = 3 * n01(rng);
    for (int axis = 0; axis < 3; ++axis) {
      for (double sign : {-1.0, 1.0}) {
        Eigen::VectorXd v = mean;
        v(axis) += sign;
        data.push_back({"c" + std::to_string(c), v});
      }
    }
  }
  const Eigen::MatrixXd lda = FitLda(data, 3);
  EXPECT_TRUE((lda * lda.transpose()).isApprox(Eigen::MatrixXd::Identity(3, 3), 1e-8));
}

TEST(FitLdaTest, RankBound) {
  const auto data = GeneratePldaTrainingSet(3, 4, IsotropicModel(5), 1);
  EXPECT_NO_THROW(FitLda(data, 2));
  EXPECT_THROW(FitLda(data, 3), DataError);
}

TEST(FitWhitenerTest, WhitensFittingSample) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n01;
  Embeddings rows(500, 3);
  for (int i = 0; i < 500; ++i) {
    const double a = n01(rng), b = n01(rng), c = n01(rng);
    rows.row(i) << 2 * a + 1, a + 0.5 * b - 2, 0.1 * c + b;
  }
  const auto fit = FitWhitener(rows);
  EXPECT_TRUE(fit.warnings.empty());
  Embeddings out(500, 3);
  for (int i = 0; i < 500; ++i) out.row(i) = fit.transform.Apply(rows.row(i).transpose());
  const Eigen::RowVectorXd mean = out.colwise().mean();
  EXPECT_LT(mean.cwiseAbs().maxCoeff(), 1e-10);
  const Eigen::MatrixXd centered = out.rowwise() - mean;
  const Eigen::MatrixXd cov = centered.transpose() * centered / 500.0;
  EXPECT_LT((cov - Eigen::MatrixXd::Identity(3, 3)).norm(), 1e-6);

  // Refitting on the whitened output gives (nearly) the identity map.
  const auto again = FitWhitener(out);
  EXPECT_LT((again.transform.matrix - Eigen::MatrixXd::Identity(3, 3)).norm(), 1e-6);
  EXPECT_LT(again.transform.offset.norm(), 1e-6);
}

TEST(FitWhitenerTest, StandardNormalIsNearIdentity) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> n01;
  Embeddings rows(20000, 2);
  for (int i = 0; i < 20000; ++i) rows.row(i) << n01(rng), n01(rng);
  const auto fit = FitWhitener(rows);
  EXPECT_LT((fit.transform.matrix - Eigen::MatrixXd::Identity(2, 2)).norm(), 0.05);
  EXPECT_LT(fit.transform.offset.norm(), 0.05);
}

TEST(FitWhitenerTest, DegenerateInputs) {
  EXPECT_THROW(FitWhitener(Embeddings::Ones(10, 2)), DataError);
  Embeddings flat(4, 2);
  flat << 0, 0, 1, 0, 2, 0, 3, 0;
  const auto fit = FitWhitener(flat);
  EXPECT_FALSE(fit.warnings.empty());
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// The golden pipeline was fitted once by FitPipeline(training set below,
// lda_dim 3, length_normalize) and frozen together with one input/output pair.
TEST(ProjectionPipelineTest, GoldenFixture) {
  const std::string dir = VBDIAR_TEST_DATA_DIR;
  const auto pipeline = PipelineFromJson(ReadText(dir + "/pipeline_golden.json"));
  std::ifstream io(dir + "/pipeline_golden_io.txt");
  Eigen::VectorXd x(pipeline.input_dim()), expected(pipeline.output_dim());
  for (int i = 0; i < x.size(); ++i) io >> x(i);
  for (int i = 0; i < expected.size(); ++i) io >> expected(i);
  ASSERT_TRUE(io);
  const Eigen::VectorXd y = pipeline.Apply(x);
  EXPECT_LT((y - expected).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(y.norm(), 1.0, 1e-12);
  EXPECT_TRUE(pipeline.Apply(x) == y);

  const auto training = GeneratePldaTrainingSet(40, 6, IsotropicModel(6), 2024);
  const auto refit = FitPipeline(training, 3, true);
  EXPECT_LT((refit.pipeline.lda - pipeline.lda).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LT((refit.pipeline.whitener.matrix - pipeline.whitener.matrix).cwiseAbs().maxCoeff(),
            1e-8);
}

}  // namespace
}  // namespace vbdiar

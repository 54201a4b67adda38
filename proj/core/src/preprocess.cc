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

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "vbdiar/error.h"
#include "vbdiar/gaussian.h"

namespace vbdiar {

Eigen::VectorXd ProjectionPipeline::Apply(const Eigen::VectorXd& x) const {
  if (x.size() != lda.cols()) {
    throw DataError("pipeline expects " + std::to_string(lda.cols()) +
                    "-dim input, got " + std::to_string(x.size()));
  }
  Eigen::VectorXd y = whitener.Apply(lda * x);
  if (length_normalize) {
    const double norm = y.norm();
    if (norm > 0.0) y /= norm;
  }
  return y;
}

Embeddings ProjectionPipeline::ApplyRows(const Embeddings& rows) const {
  Embeddings out(rows.rows(), output_dim());
  for (Eigen::Index m = 0; m < rows.rows(); ++m) {
    out.row(m) = Apply(rows.row(m).transpose()).transpose();
  }
  return out;
}

ProjectionPipeline ProjectionPipeline::Identity(int dim, bool length_normalize) {
  return ProjectionPipeline{
      Eigen::MatrixXd::Identity(dim, dim),
      {Eigen::MatrixXd::Identity(dim, dim), Eigen::VectorXd::Zero(dim)},
      length_normalize};
}

Eigen::MatrixXd FitLda(const std::vector<LabeledVector>& data, int out_dim) {
  if (out_dim < 1) throw std::invalid_argument("LDA output dimension must be >= 1");
  if (data.empty()) throw DataError("LDA training set is empty");
  const auto dim = data.front().vector.size();

  std::unordered_map<std::string, std::size_t> index;
  std::vector<int> counts;
  std::vector<Eigen::VectorXd> sums;
  Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd total = Eigen::VectorXd::Zero(dim);
  for (const auto& item : data) {
    if (item.vector.size() != dim) throw DataError("LDA vectors have inconsistent dimensions");
    auto [it, inserted] = index.try_emplace(item.speaker, counts.size());
    if (inserted) {
      counts.push_back(0);
      sums.push_back(Eigen::VectorXd::Zero(dim));
    }
    counts[it->second] += 1;
    sums[it->second] += item.vector;
    scatter.noalias() += item.vector * item.vector.transpose();
    total += item.vector;
  }
  const int num_classes = static_cast<int>(counts.size());
  if (num_classes < 2) throw DataError("LDA needs at least 2 speakers");
  const int achievable = std::min<int>(static_cast<int>(dim), num_classes - 1);
  if (out_dim > achievable) {
    throw DataError("LDA output dimension " + std::to_string(out_dim) +
                    " exceeds the achievable maximum " + std::to_string(achievable));
  }

  const double n = static_cast<double>(data.size());
  const Eigen::VectorXd global_mean = total / n;
  Eigen::MatrixXd between = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd class_scatter = Eigen::MatrixXd::Zero(dim, dim);
  for (int c = 0; c < num_classes; ++c) {
    const Eigen::VectorXd mean = sums[c] / counts[c];
    const Eigen::VectorXd centered = mean - global_mean;
    between.noalias() += counts[c] * (centered * centered.transpose());
    class_scatter.noalias() += counts[c] * (mean * mean.transpose());
  }
  between /= n;
  Eigen::MatrixXd within = (scatter - class_scatter) / n;
  within = 0.5 * (within + within.transpose());
  const double trace = within.trace();
  if (!(trace > 0.0)) throw DataError("LDA within-class scatter is zero");
  within.diagonal().array() += 1e-6 * trace / static_cast<double>(dim);

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      0.5 * (between + between.transpose()), within);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("LDA generalized eigenproblem failed");
  }
  // Eigenvalues come back in increasing order.
  Eigen::MatrixXd projection(out_dim, dim);
  for (int r = 0; r < out_dim; ++r) {
    Eigen::VectorXd v = solver.eigenvectors().col(dim - 1 - r);
    // Fix the sign so the largest-magnitude component is positive.
    Eigen::Index pivot;
    v.cwiseAbs().maxCoeff(&pivot);
    if (v(pivot) < 0.0) v = -v;
    projection.row(r) = v.normalized().transpose();
  }
  return projection;
}

WhitenerFit FitWhitener(const Embeddings& rows) {
  if (rows.rows() < 2) throw DataError("whitener needs at least 2 vectors");
  WhitenerFit fit;
  Eigen::MatrixXd cov = RowCovariance(rows);
  RegularizeScatter(cov, "whitener sample covariance", fit.warnings);
  const auto cov_llt = FactorizeSpd(cov, "whitener sample covariance");
  // inverse(cov) = L L'  =>  L' cov L = I.
  const auto inv_llt = FactorizeSpd(SpdInverse(cov_llt), "inverse sample covariance");
  const Eigen::MatrixXd matrix = inv_llt.matrixU();
  const Eigen::VectorXd mean = rows.colwise().mean().transpose();
  fit.transform = AffineTransform{matrix, -(matrix * mean)};
  return fit;
}

PipelineFit FitPipeline(const std::vector<LabeledVector>& data, int lda_dim,
                        bool length_normalize) {
  PipelineFit fit;
  fit.pipeline.lda = FitLda(data, lda_dim);
  Embeddings projected(static_cast<Eigen::Index>(data.size()), lda_dim);
  for (std::size_t i = 0; i < data.size(); ++i) {
    projected.row(static_cast<Eigen::Index>(i)) =
        (fit.pipeline.lda * data[i].vector).transpose();
  }
  auto whitener = FitWhitener(projected);
  fit.pipeline.whitener = std::move(whitener.transform);
  fit.warnings = std::move(whitener.warnings);
  fit.pipeline.length_normalize = length_normalize;
  return fit;
}

}  // namespace vbdiar

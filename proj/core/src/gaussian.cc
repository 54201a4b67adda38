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

#include "vbdiar/gaussian.h"

#include <algorithm>
#include <cmath>

#include "vbdiar/error.h"

namespace vbdiar {

Eigen::LLT<Eigen::MatrixXd> FactorizeSpd(const Eigen::MatrixXd& matrix,
                                         std::string_view what) {
  Eigen::LLT<Eigen::MatrixXd> llt(matrix);
  if (llt.info() != Eigen::Success || !llt.matrixL().toDenseMatrix().allFinite()) {
    throw NumericalError("Cholesky factorization failed for " + std::string(what));
  }
  return llt;
}

double LogDet(const Eigen::LLT<Eigen::MatrixXd>& llt) {
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

Eigen::MatrixXd SpdInverse(const Eigen::LLT<Eigen::MatrixXd>& llt) {
  const auto dim = llt.matrixLLT().rows();
  Eigen::MatrixXd inverse = llt.solve(Eigen::MatrixXd::Identity(dim, dim));
  return 0.5 * (inverse + inverse.transpose());
}

double LogGaussianDensity(const Eigen::VectorXd& x, const Eigen::VectorXd& mean,
                          const Eigen::LLT<Eigen::MatrixXd>& cov_llt) {
  const Eigen::VectorXd whitened = cov_llt.matrixL().solve(x - mean);
  return -0.5 * (static_cast<double>(x.size()) * kLog2Pi + LogDet(cov_llt) +
                 whitened.squaredNorm());
}

bool IsSymmetric(const Eigen::MatrixXd& matrix, double relative_tolerance) {
  if (matrix.rows() != matrix.cols()) return false;
  const double scale = std::max(matrix.cwiseAbs().maxCoeff(), 1e-300);
  return (matrix - matrix.transpose()).cwiseAbs().maxCoeff() <=
         relative_tolerance * scale;
}

Eigen::MatrixXd RowCovariance(const Eigen::MatrixXd& rows) {
  const Eigen::RowVectorXd mean = rows.colwise().mean();
  const Eigen::MatrixXd centered = rows.rowwise() - mean;
  return (centered.transpose() * centered) / static_cast<double>(rows.rows());
}

bool RegularizeScatter(Eigen::MatrixXd& scatter, std::string_view what,
                       std::vector<std::string>& warnings,
                       double relative_ridge) {
  const auto dim = scatter.rows();
  const double trace = scatter.trace();
  if (!(trace > 0.0) || !std::isfinite(trace)) {
    throw DataError(std::string(what) + " has zero total variance");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(scatter,
                                                     Eigen::EigenvaluesOnly);
  const double min_eig = eig.eigenvalues().minCoeff();
  const double max_eig = eig.eigenvalues().maxCoeff();
  if (min_eig > 1e-10 * max_eig) return false;
  const double ridge = relative_ridge * trace / static_cast<double>(dim);
  scatter.diagonal().array() += ridge;
  warnings.push_back(std::string(what) + " is rank-deficient; added ridge " +
                     std::to_string(ridge) + " to the diagonal");
  return true;
}

}  // namespace vbdiar

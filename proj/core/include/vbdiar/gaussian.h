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

#ifndef VBDIAR_GAUSSIAN_H_
#define VBDIAR_GAUSSIAN_H_

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace vbdiar {

inline constexpr double kLog2Pi = 1.8378770664093454836;

// Cholesky factorization of a symmetric positive-definite matrix. Throws
// NumericalError naming `what` when the factorization fails.
Eigen::LLT<Eigen::MatrixXd> FactorizeSpd(const Eigen::MatrixXd& matrix,
                                         std::string_view what);

double LogDet(const Eigen::LLT<Eigen::MatrixXd>& llt);

// Inverse of an SPD matrix by solving against identity columns. The result is
// explicitly symmetrized.
Eigen::MatrixXd SpdInverse(const Eigen::LLT<Eigen::MatrixXd>& llt);

// log N(x; mean, cov) where `cov_llt` factorizes cov.
double LogGaussianDensity(const Eigen::VectorXd& x, const Eigen::VectorXd& mean,
                          const Eigen::LLT<Eigen::MatrixXd>& cov_llt);

bool IsSymmetric(const Eigen::MatrixXd& matrix, double relative_tolerance);

// Maximum-likelihood (divide by N) covariance of the rows of `rows`.
Eigen::MatrixXd RowCovariance(const Eigen::MatrixXd& rows);

// Adds a ridge of `relative_ridge` * trace/D to the diagonal when `scatter`
// is not numerically positive-definite. Returns true if a ridge was added.
// Throws DataError when the trace is zero (nothing to scale the ridge by).
bool RegularizeScatter(Eigen::MatrixXd& scatter, std::string_view what,
                       std::vector<std::string>& warnings,
                       double relative_ridge = 1e-6);

}  // namespace vbdiar

#endif  // VBDIAR_GAUSSIAN_H_

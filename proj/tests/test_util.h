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

#ifndef VBDIAR_TESTS_TEST_UTIL_H_
#define VBDIAR_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "vbdiar/plda.h"

namespace vbdiar::testing_util {

// Random SPD matrix with eigenvalues in [lo, hi].
inline Eigen::MatrixXd RandomSpd(int d, std::mt19937_64& rng, double lo, double hi) {
  std::normal_distribution<double> n01;
  std::uniform_real_distribution<double> eig(lo, hi);
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = n01(rng);
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd q = qr.householderQ();
  Eigen::VectorXd values(d);
  for (int i = 0; i < d; ++i) values(i) = eig(rng);
  Eigen::MatrixXd m = q * values.asDiagonal() * q.transpose();
  return 0.5 * (m + m.transpose());
}

// Random two-covariance model with covariances of eigenvalues in [0.2, 2].
inline TwoCovPlda RandomModel(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n01;
  Eigen::VectorXd mu(d);
  for (int i = 0; i < d; ++i) mu(i) = n01(rng);
  const Eigen::MatrixXd b = RandomSpd(d, rng, 0.2, 2.0);
  const Eigen::MatrixXd w = RandomSpd(d, rng, 0.2, 2.0);
  return TwoCovPlda::FromCovariances(mu, b, w);
}

inline Eigen::MatrixXd Scalar(double v) { return Eigen::MatrixXd::Constant(1, 1, v); }

}  // namespace vbdiar::testing_util

#endif  // VBDIAR_TESTS_TEST_UTIL_H_

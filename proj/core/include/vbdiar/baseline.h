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

#ifndef VBDIAR_BASELINE_H_
#define VBDIAR_BASELINE_H_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "vbdiar/plda.h"

namespace vbdiar {

// Smallest d >= 1 whose top-d eigenvalues (sorted descending by the caller)
// hold at least half of the total.
int HalfEnergyDimension(const Eigen::VectorXd& descending_eigenvalues);

struct PcaProjection {
  Embeddings projected;  // M x d
  int dim = 0;
  double retained_fraction = 0.0;
  Eigen::VectorXd eigenvalues;  // all of them, descending
};

// Centers the utterance's embeddings and projects them onto the top-d
// eigenvectors of their covariance, d chosen by HalfEnergyDimension. Throws
// DataError for M < 2 or zero total variance.
PcaProjection PcaProjectHalfEnergy(const Embeddings& embeddings);

struct KMeansOptions {
  int k = 2;
  int restarts = 10;
  std::uint64_t seed = 0;
  int max_iterations = 1000;
};

struct KMeansResult {
  Assignment labels;
  double objective = 0.0;  // sum over non-zero vectors of 1 - cos(v, centroid)
  int best_restart = 0;
  std::vector<double> restart_objectives;
};

// Spherical k-means (cosine distance) with k-means++ seeding and Lloyd
// iterations, followed by single-point moves until no move lowers the
// objective. Zero vectors are labeled 0 and ignored. Throws DataError when
// fewer than k non-zero vectors are given.
KMeansResult KMeansCosine(const Embeddings& vectors, const KMeansOptions& options);

// Objective of a labeling with centroids set to the normalized cluster sums.
double CosineObjective(const Embeddings& vectors, const Assignment& labels, int k);

}  // namespace vbdiar

#endif  // VBDIAR_BASELINE_H_

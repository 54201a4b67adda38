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

#include "vbdiar/baseline.h"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "vbdiar/error.h"
#include "vbdiar/random.h"

namespace vbdiar {

int HalfEnergyDimension(const Eigen::VectorXd& descending_eigenvalues) {
  const double total = descending_eigenvalues.sum();
  if (!(total > 0.0)) throw DataError("total variance is zero");
  // The slack absorbs rounding on exactly-half spectra such as (1,1,1,1,1,1).
  const double threshold = 0.5 * total * (1.0 - 1e-12);
  double cumulative = 0.0;
  for (Eigen::Index d = 0; d < descending_eigenvalues.size(); ++d) {
    cumulative += descending_eigenvalues(d);
    if (cumulative >= threshold) return static_cast<int>(d + 1);
  }
  return static_cast<int>(descending_eigenvalues.size());
}

PcaProjection PcaProjectHalfEnergy(const Embeddings& embeddings) {
  if (embeddings.rows() < 2) throw DataError("PCA needs at least 2 vectors");
  const Eigen::RowVectorXd mean = embeddings.colwise().mean();
  const Eigen::MatrixXd centered = embeddings.rowwise() - mean;
  const Eigen::MatrixXd cov =
      (centered.transpose() * centered) / static_cast<double>(embeddings.rows());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  if (eig.info() != Eigen::Success) throw NumericalError("PCA eigensolver failed");

  const Eigen::Index dim = cov.rows();
  PcaProjection out;
  out.eigenvalues = eig.eigenvalues().reverse().cwiseMax(0.0);
  if (!(out.eigenvalues.sum() > 0.0)) {
    throw DataError("all segments are identical; PCA has zero total variance");
  }
  out.dim = HalfEnergyDimension(out.eigenvalues);
  out.retained_fraction = out.eigenvalues.head(out.dim).sum() / out.eigenvalues.sum();
  Eigen::MatrixXd basis(dim, out.dim);
  for (int d = 0; d < out.dim; ++d) basis.col(d) = eig.eigenvectors().col(dim - 1 - d);
  out.projected = centered * basis;
  return out;
}

double CosineObjective(const Embeddings& vectors, const Assignment& labels, int k) {
  std::vector<Eigen::VectorXd> sums(k, Eigen::VectorXd::Zero(vectors.cols()));
  std::vector<int> counts(k, 0);
  for (Eigen::Index m = 0; m < vectors.rows(); ++m) {
    const double norm = vectors.row(m).norm();
    if (norm == 0.0) continue;
    sums[labels[m]] += vectors.row(m).transpose() / norm;
    counts[labels[m]] += 1;
  }
  double objective = 0.0;
  for (int c = 0; c < k; ++c) objective += counts[c] - sums[c].norm();
  return objective;
}

namespace {

struct Clustering {
  Assignment labels;
  std::vector<Eigen::VectorXd> sums;
  std::vector<int> counts;
};

int NearestCentroid(const Eigen::VectorXd& u, const std::vector<Eigen::VectorXd>& centroids) {
  int best = 0;
  double best_dot = -std::numeric_limits<double>::infinity();
  for (int c = 0; c < static_cast<int>(centroids.size()); ++c) {
    const double dot = u.dot(centroids[c]);
    if (dot > best_dot) {
      best_dot = dot;
      best = c;
    }
  }
  return best;
}

std::vector<Eigen::VectorXd> PlusPlusSeeds(const std::vector<Eigen::VectorXd>& units,
                                           int k, Rng& rng) {
  const int n = static_cast<int>(units.size());
  std::vector<Eigen::VectorXd> centroids;
  std::vector<bool> chosen(n, false);
  const int first = std::uniform_int_distribution<int>(0, n - 1)(rng);
  centroids.push_back(units[first]);
  chosen[first] = true;
  std::vector<double> distance(n);
  while (static_cast<int>(centroids.size()) < k) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& c : centroids) nearest = std::min(nearest, 1.0 - units[i].dot(c));
      distance[i] = chosen[i] ? 0.0 : std::max(nearest, 0.0);
      total += distance[i];
    }
    int pick = 0;
    if (total > 0.0) {
      pick = std::discrete_distribution<int>(distance.begin(), distance.end())(rng);
    } else {
      while (chosen[pick]) ++pick;
    }
    chosen[pick] = true;
    centroids.push_back(units[pick]);
  }
  return centroids;
}

void Recount(const std::vector<Eigen::VectorXd>& units, int k, Clustering& c) {
  const auto dim = units.front().size();
  c.sums.assign(k, Eigen::VectorXd::Zero(dim));
  c.counts.assign(k, 0);
  for (std::size_t i = 0; i < units.size(); ++i) {
    c.sums[c.labels[i]] += units[i];
    c.counts[c.labels[i]] += 1;
  }
}

// Moves the worst-fitting point of a multi-member cluster into each empty one.
void RepairEmpty(const std::vector<Eigen::VectorXd>& units, int k, Clustering& c) {
  for (int empty = 0; empty < k; ++empty) {
    if (c.counts[empty] > 0) continue;
    int worst = -1;
    double worst_distance = -1.0;
    for (std::size_t i = 0; i < units.size(); ++i) {
      const int label = c.labels[i];
      if (c.counts[label] < 2) continue;
      const double norm = c.sums[label].norm();
      const double distance = norm > 0.0 ? 1.0 - units[i].dot(c.sums[label]) / norm : 1.0;
      if (distance > worst_distance) {
        worst_distance = distance;
        worst = static_cast<int>(i);
      }
    }
    const int from = c.labels[worst];
    c.sums[from] -= units[worst];
    c.counts[from] -= 1;
    c.labels[worst] = empty;
    c.sums[empty] += units[worst];
    c.counts[empty] += 1;
  }
}

Clustering Lloyd(const std::vector<Eigen::VectorXd>& units, int k,
                 std::vector<Eigen::VectorXd> centroids, int max_iterations) {
  Clustering c;
  c.labels.assign(units.size(), -1);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < units.size(); ++i) {
      const int label = NearestCentroid(units[i], centroids);
      if (label != c.labels[i]) {
        c.labels[i] = label;
        changed = true;
      }
    }
    Recount(units, k, c);
    RepairEmpty(units, k, c);
    if (!changed) break;
    for (int j = 0; j < k; ++j) {
      const double norm = c.sums[j].norm();
      centroids[j] = norm > 0.0 ? Eigen::VectorXd(c.sums[j] / norm) : c.sums[j];
    }
  }
  return c;
}

// Single-point moves that strictly lower sum_k (n_k - |S_k|).
void RefineBySingleMoves(const std::vector<Eigen::VectorXd>& units, int k,
                         Clustering& c) {
  constexpr double kMinGain = 1e-12;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < units.size(); ++i) {
      const int from = c.labels[i];
      if (c.counts[from] < 2) continue;
      const double from_before = c.sums[from].norm();
      const double from_after = (c.sums[from] - units[i]).norm();
      int best_to = -1;
      double best_delta = -kMinGain;
      for (int to = 0; to < k; ++to) {
        if (to == from) continue;
        const double delta = from_before + c.sums[to].norm() - from_after -
                             (c.sums[to] + units[i]).norm();
        if (delta < best_delta) {
          best_delta = delta;
          best_to = to;
        }
      }
      if (best_to >= 0) {
        c.sums[from] -= units[i];
        c.counts[from] -= 1;
        c.sums[best_to] += units[i];
        c.counts[best_to] += 1;
        c.labels[i] = best_to;
        moved = true;
      }
    }
  }
}

}  // namespace

KMeansResult KMeansCosine(const Embeddings& vectors, const KMeansOptions& options) {
  if (options.k < 1 || options.restarts < 1 || options.max_iterations < 1) {
    throw std::invalid_argument("k, restarts and max_iterations must be >= 1");
  }
  const int k = options.k;
  if (vectors.rows() < k) {
    throw DataError("k-means needs at least k=" + std::to_string(k) + " vectors, got " +
                    std::to_string(vectors.rows()));
  }
  std::vector<Eigen::VectorXd> units;
  std::vector<Eigen::Index> active;
  for (Eigen::Index m = 0; m < vectors.rows(); ++m) {
    const double norm = vectors.row(m).norm();
    if (norm == 0.0) continue;
    units.push_back(vectors.row(m).transpose() / norm);
    active.push_back(m);
  }
  if (static_cast<int>(units.size()) < k) {
    throw DataError("k-means needs at least k non-zero vectors");
  }

  KMeansResult result;
  Clustering best;
  for (int r = 0; r < options.restarts; ++r) {
    Rng rng(DeriveSeed(options.seed, static_cast<std::uint64_t>(r)));
    Clustering c = Lloyd(units, k, PlusPlusSeeds(units, k, rng), options.max_iterations);
    RefineBySingleMoves(units, k, c);
    double objective = 0.0;
    for (int j = 0; j < k; ++j) objective += c.counts[j] - c.sums[j].norm();
    result.restart_objectives.push_back(objective);
    if (r == 0 || objective < result.objective) {
      result.objective = objective;
      result.best_restart = r;
      best = std::move(c);
    }
  }
  result.labels.assign(vectors.rows(), 0);
  for (std::size_t i = 0; i < active.size(); ++i) result.labels[active[i]] = best.labels[i];
  return result;
}

}  // namespace vbdiar

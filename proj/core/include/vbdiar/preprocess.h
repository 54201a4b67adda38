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

#ifndef VBDIAR_PREPROCESS_H_
#define VBDIAR_PREPROCESS_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vbdiar/plda.h"

namespace vbdiar {

// y = matrix * x + offset.
struct AffineTransform {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd offset;

  Eigen::VectorXd Apply(const Eigen::VectorXd& x) const { return matrix * x + offset; }
};

// LDA projection, then whitening, then optional unit length normalization.
struct ProjectionPipeline {
  Eigen::MatrixXd lda;  // d x D
  AffineTransform whitener;  // d x d
  bool length_normalize = true;

  int input_dim() const { return static_cast<int>(lda.cols()); }
  int output_dim() const { return static_cast<int>(lda.rows()); }

  // Throws DataError on dimension mismatch.
  Eigen::VectorXd Apply(const Eigen::VectorXd& x) const;
  // Row-wise Apply over an M x D matrix.
  Embeddings ApplyRows(const Embeddings& rows) const;

  static ProjectionPipeline Identity(int dim, bool length_normalize);
};

// Rows of the result are generalized eigenvectors of (between, within)
// scatter, ordered by decreasing eigenvalue and scaled to unit Euclidean norm.
// Within-class scatter gets a ridge of 1e-6 * trace/D. Throws DataError with
// the achievable maximum when out_dim > min(D, #speakers - 1).
Eigen::MatrixXd FitLda(const std::vector<LabeledVector>& data, int out_dim);

struct WhitenerFit {
  AffineTransform transform;
  std::vector<std::string> warnings;
};

// Whitening by the Cholesky factor of the inverse sample covariance (divide
// by N). A rank-deficient covariance is ridged with a warning; a zero
// covariance is a DataError.
WhitenerFit FitWhitener(const Embeddings& rows);

struct PipelineFit {
  ProjectionPipeline pipeline;
  std::vector<std::string> warnings;
};

// Fits LDA and then the whitener on the LDA-projected training set.
PipelineFit FitPipeline(const std::vector<LabeledVector>& data, int lda_dim,
                        bool length_normalize);

}  // namespace vbdiar

#endif  // VBDIAR_PREPROCESS_H_

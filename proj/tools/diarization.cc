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

#include "diarization.h"

#include <stdexcept>

#include "vbdiar/baseline.h"
#include "vbdiar/init.h"

namespace vbdiar::tools {

Method ParseMethod(const std::string& name) {
  if (name == "vb") return Method::kVb;
  if (name == "vb-da") return Method::kVbDa;
  if (name == "kmeans-pca") return Method::kKMeansPca;
  throw std::invalid_argument("unknown method '" + name + "'");
}

InitKind ParseInit(const std::string& name) {
  if (name == "random") return InitKind::kRandom;
  if (name == "cos") return InitKind::kCosine;
  if (name == "llr") return InitKind::kLlr;
  throw std::invalid_argument("unknown init '" + name + "'");
}

std::string MethodName(Method method) {
  switch (method) {
    case Method::kVb: return "vb";
    case Method::kVbDa: return "vb-da";
    case Method::kKMeansPca: return "kmeans-pca";
  }
  return "";
}

std::string InitName(InitKind init) {
  switch (init) {
    case InitKind::kRandom: return "random";
    case InitKind::kCosine: return "cos";
    case InitKind::kLlr: return "llr";
  }
  return "";
}

DiarizeOutput DiarizeSegments(const TwoCovPlda& model, const Embeddings& embeddings,
                              const DiarizeOptions& options) {
  const int num_segments = static_cast<int>(embeddings.rows());
  DiarizeOutput out;
  if (num_segments < options.num_speakers || num_segments < 2) {
    out.labels.assign(num_segments, 0);
    return out;
  }

  if (options.method == Method::kKMeansPca) {
    const auto pca = PcaProjectHalfEnergy(embeddings);
    KMeansOptions km;
    km.k = options.num_speakers;
    km.restarts = options.kmeans_restarts;
    km.seed = options.seed;
    out.labels = KMeansCosine(pca.projected, km).labels;
    return out;
  }

  VbOptions vb;
  vb.convergence = options.convergence;
  vb.record_trace = options.record_trace;
  if (options.method == Method::kVbDa) vb.schedule = options.schedule;

  VbInit init;
  if (options.init == InitKind::kRandom) {
    init = RandomInit(num_segments, options.num_speakers, options.seed);
  } else {
    if (options.num_speakers != 2) {
      throw std::invalid_argument("the three-speaker heuristic selects exactly 2 speakers");
    }
    HeuristicInit strategy;
    strategy.metric =
        options.init == InitKind::kCosine ? PairMetric::kCosine : PairMetric::kPldaLlr;
    strategy.attempts = options.heuristic_attempts;
    strategy.vb_iterations = options.heuristic_vb_iterations;
    strategy.seed = options.seed;
    init = HeuristicPairInit(model, embeddings, strategy).speakers;
  }
  auto result = RunVb(model, embeddings, init, vb);
  out.labels = MapAssignment(result.state);
  out.trace = std::move(result.trace);
  return out;
}

}  // namespace vbdiar::tools

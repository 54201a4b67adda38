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

#include <benchmark/benchmark.h>

#include "vbdiar/baseline.h"
#include "vbdiar/der.h"
#include "vbdiar/init.h"
#include "vbdiar/synth.h"
#include "vbdiar/vb.h"

namespace vbdiar {
namespace {

Conversation MakeConversation(int dim, int segments) {
  CorpusSpec spec;
  spec.num_conversations = 1;
  spec.dim = dim;
  spec.segments_per_conversation = {segments, segments};
  spec.dominance = 0.8;
  spec.separation = 2.0;
  spec.seed = 3;
  return GenerateCorpus(spec, IsotropicModel(dim)).front();
}

void BM_RunVb(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const int segments = static_cast<int>(state.range(1));
  const auto conv = MakeConversation(dim, segments);
  CorpusSpec spec;
  spec.separation = 2.0;
  const auto model = CorpusModel(spec, IsotropicModel(dim));
  const auto init = RandomInit(segments, 2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunVb(model, conv.embeddings, init));
  }
}
BENCHMARK(BM_RunVb)->Args({10, 40})->Args({50, 100})->Args({200, 200});

void BM_RunVbAnnealed(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto conv = MakeConversation(dim, 60);
  CorpusSpec spec;
  spec.separation = 2.0;
  const auto model = CorpusModel(spec, IsotropicModel(dim));
  VbOptions options;
  options.schedule = AnnealSchedule{};
  const auto init = RandomInit(60, 2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunVb(model, conv.embeddings, init, options));
  }
}
BENCHMARK(BM_RunVbAnnealed)->Arg(10)->Arg(100);

void BM_HeuristicPairInit(benchmark::State& state) {
  const auto conv = MakeConversation(10, 60);
  CorpusSpec spec;
  spec.separation = 2.0;
  const auto model = CorpusModel(spec, IsotropicModel(10));
  HeuristicInit strategy;
  strategy.metric = state.range(0) == 0 ? PairMetric::kCosine : PairMetric::kPldaLlr;
  for (auto _ : state) {
    benchmark::DoNotOptimize(HeuristicPairInit(model, conv.embeddings, strategy));
  }
}
BENCHMARK(BM_HeuristicPairInit)->Arg(0)->Arg(1);

void BM_KMeansPca(benchmark::State& state) {
  const auto conv = MakeConversation(static_cast<int>(state.range(0)), 100);
  for (auto _ : state) {
    const auto pca = PcaProjectHalfEnergy(conv.embeddings);
    benchmark::DoNotOptimize(KMeansCosine(pca.projected, {}));
  }
}
BENCHMARK(BM_KMeansPca)->Arg(10)->Arg(100);

void BM_ComputeDer(benchmark::State& state) {
  const auto conv = MakeConversation(10, static_cast<int>(state.range(0)));
  Assignment flipped = conv.labels;
  for (std::size_t m = 0; m < flipped.size(); m += 7) flipped[m] = 1 - flipped[m];
  const auto hyp = TurnsFromSegments(conv.recording_id, conv.spans, flipped);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeDer(conv.reference, hyp, 0.25));
  }
}
BENCHMARK(BM_ComputeDer)->Arg(60)->Arg(1000);

}  // namespace
}  // namespace vbdiar

BENCHMARK_MAIN();

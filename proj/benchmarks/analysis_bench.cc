// Copyright 2026 The gngshape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "gngshape/analysis.h"
#include "gngshape/features.h"
#include "gngshape/gng.h"
#include "gngshape/synth.h"

namespace gngshape {
namespace {

const GngGraph& HandGraph() {
  static const GngGraph g = [] {
    GngParams p;
    p.seed = 5;
    return TrainGng(SynthHand(4, 1.0, 0.0, 9), p);
  }();
  return g;
}

void BM_CandidatePairs(benchmark::State& state) {
  const GngGraph& g = HandGraph();
  const BoundaryCycle c = ExtractBoundary(g);
  const BoolMatrix a = AdjacencyMatrix(g);
  const auto kind = static_cast<BulgeKind>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CandidatePairs(a, c.b, kind));
  }
}
BENCHMARK(BM_CandidatePairs)
    ->Arg(static_cast<int>(BulgeKind::kFinger))
    ->Arg(static_cast<int>(BulgeKind::kStickingFingers))
    ->Arg(static_cast<int>(BulgeKind::kWrist))
    ->Unit(benchmark::kMicrosecond);

void BM_AnalyzeGraph(benchmark::State& state) {
  const GngGraph& g = HandGraph();
  for (auto _ : state) {
    benchmark::DoNotOptimize(AnalyzeGraph(g));
  }
}
BENCHMARK(BM_AnalyzeGraph)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace gngshape

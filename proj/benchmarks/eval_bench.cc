// Copyright 2026 The Sentisead Authors.
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

#include "sentisead/eval.h"
#include "sentisead/rng.h"

namespace {

using namespace sentisead;

void BM_MetricsFromLabels(benchmark::State& state) {
  Rng rng(3);
  std::vector<Polarity> gold, pred;
  for (int i = 0; i < state.range(0); ++i) {
    gold.push_back(from_ordinal(static_cast<int>(rng.below(3)) - 1));
    pred.push_back(from_ordinal(static_cast<int>(rng.below(3)) - 1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(eval::metrics(eval::confusion(gold, pred)));
}
BENCHMARK(BM_MetricsFromLabels)->Arg(1000)->Arg(100000);

void BM_Complementarity(benchmark::State& state) {
  Rng rng(5);
  PredictionMatrix pm("bench", "");
  const std::size_t n = 5000;
  for (std::size_t i = 0; i < n; ++i) {
    pm.add_row("u" + std::to_string(i), from_ordinal(static_cast<int>(rng.below(3)) - 1));
  }
  for (int t = 0; t < 5; ++t) {
    std::vector<Polarity> col;
    for (std::size_t i = 0; i < n; ++i) {
      col.push_back(from_ordinal(static_cast<int>(rng.below(3)) - 1));
    }
    pm.add_column("t" + std::to_string(t), std::move(col));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval::complementarity(pm, PolarityGroup::kNonNeutral));
  }
}
BENCHMARK(BM_Complementarity);

}  // namespace

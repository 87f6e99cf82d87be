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

#include "sentisead/learner.h"
#include "sentisead/rng.h"

namespace {

using namespace sentisead;

learner::TrainingSet sparse_rows(std::size_t n, std::size_t dim) {
  Rng rng(1);
  learner::TrainingSet d;
  for (std::size_t i = 0; i < n; ++i) {
    const auto cls = static_cast<int>(i % 3);
    SparseVector v;
    v.dim = dim;
    for (std::uint32_t f = 0; f < dim; ++f) {
      const bool signal = f % 3 == static_cast<std::uint32_t>(cls) && rng.below(4) == 0;
      if (signal || rng.below(40) == 0) v.push(f, 1.0 + rng.unit());
    }
    d.X.push_back(std::move(v));
    d.y.push_back(from_ordinal(cls - 1));
  }
  return d;
}

void BM_FitForest(benchmark::State& state) {
  const auto d = sparse_rows(static_cast<std::size_t>(state.range(0)), 300);
  learner::LearnerConfig cfg;
  cfg.n_trees = 50;
  for (auto _ : state) benchmark::DoNotOptimize(learner::fit(d, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FitForest)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_FitGbt(benchmark::State& state) {
  const auto d = sparse_rows(1000, 300);
  learner::LearnerConfig cfg;
  cfg.algorithm = learner::Algorithm::kGbt;
  cfg.n_trees = 50;
  for (auto _ : state) benchmark::DoNotOptimize(learner::fit(d, cfg));
}
BENCHMARK(BM_FitGbt)->Unit(benchmark::kMillisecond);

void BM_PredictForest(benchmark::State& state) {
  const auto d = sparse_rows(1000, 300);
  learner::LearnerConfig cfg;
  const auto model = learner::fit(d, cfg);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(model.predict(d.X[i++ % d.size()]));
}
BENCHMARK(BM_PredictForest);

}  // namespace

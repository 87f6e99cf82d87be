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


#ifndef SENTISEAD_SWEEP_H_
#define SENTISEAD_SWEEP_H_

#include <string>
#include <utility>
#include <vector>

#include "sentisead/ensemble.h"
#include "sentisead/learner.h"

namespace sentisead::learner {

// Parameter name -> candidate values, enumerated in the given order with
// the last parameter varying fastest. Recognized names: algorithm, n_trees,
// max_depth ("none" for unlimited), min_leaf, max_features,
// learning_rate.
using Grid = std::vector<std::pair<std::string, std::vector<std::string>>>;

struct SweepRow {
  LearnerConfig config;
  std::vector<std::pair<std::string, std::string>> point;
  double macro_f1 = 0.0;
};

struct SweepResult {
  LearnerConfig best;
  std::vector<SweepRow> table;
};

// Applies one grid point on top of `base`. Throws ConfigError for unknown
// names or unparsable values.
LearnerConfig apply_point(
    LearnerConfig base,
    const std::vector<std::pair<std::string, std::string>>& point);

std::vector<std::vector<std::pair<std::string, std::string>>> grid_points(
    const Grid& grid);

// Scores every Cartesian point by the cross-validated macro-F1 of the
// stacker built from `spec` with that learner configuration. The best
// point is the maximum, ties going to the earlier point. Throws ConfigError
// on an empty grid.
SweepResult grid_sweep(const Dataset& d, const FoldAssignment& folds,
                       const PredictionMatrix& matrix, const Grid& grid,
                       const EnsembleSpec& spec, const FeatureContext& ctx);

}  // namespace sentisead::learner

#endif  // SENTISEAD_SWEEP_H_

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


#ifndef SENTISEAD_SRC_TREE_BUILDER_H_
#define SENTISEAD_SRC_TREE_BUILDER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sentisead/learner.h"
#include "sentisead/rng.h"
#include "sentisead/sparse.h"

namespace sentisead::learner::internal {

// Grows one Gini classification tree over the rows with non-zero bootstrap
// weight. `classes` holds class_index() per row.
Tree grow_classification_tree(std::span<const SparseVector> X,
                              std::span<const std::uint8_t> classes,
                              std::span<const std::uint32_t> weights,
                              std::size_t dim, const LearnerConfig& cfg,
                              Rng& rng);

// Column-major copy of a sparse matrix, each column sorted by value.
struct Columns {
  struct Entry {
    double value;
    std::uint32_t row;
  };
  std::vector<std::vector<Entry>> by_feature;
};

Columns sorted_columns(std::span<const SparseVector> X, std::size_t dim);

// Least-squares regression stump on `residuals`, leaf values
// sum(residual) / sum(hessian). Returns a single-leaf tree when no split
// satisfies min_leaf.
Tree fit_stump(const Columns& cols, std::span<const double> residuals,
               std::span<const double> hessians, int min_leaf);

}  // namespace sentisead::learner::internal

#endif  // SENTISEAD_SRC_TREE_BUILDER_H_

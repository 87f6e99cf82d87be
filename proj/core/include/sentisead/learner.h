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


#ifndef SENTISEAD_LEARNER_H_
#define SENTISEAD_LEARNER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentisead/polarity.h"
#include "sentisead/rng.h"
#include "sentisead/sparse.h"

namespace sentisead::learner {

enum class Algorithm { kRandomForest, kGbt };
enum class MaxFeatures { kSqrt, kLog2, kAll };
enum class OversampleStrategy { kNone, kDuplicateToParity };

std::string_view to_string(Algorithm a);
std::string_view to_string(MaxFeatures m);
std::string_view to_string(OversampleStrategy s);
Algorithm parse_algorithm(std::string_view s);
MaxFeatures parse_max_features(std::string_view s);
OversampleStrategy parse_oversample(std::string_view s);

struct LearnerConfig {
  Algorithm algorithm = Algorithm::kRandomForest;
  int n_trees = 100;
  std::optional<int> max_depth;  // unlimited when empty
  int min_leaf = 1;
  MaxFeatures max_features = MaxFeatures::kSqrt;
  double learning_rate = 0.1;  // gbt only
  std::uint64_t seed = kDefaultSeed;
  // Worker threads for tree construction; 0 picks hardware concurrency.
  // Results do not depend on this value.
  unsigned threads = 0;

  // Throws ConfigError when a bound is violated.
  void validate() const;
  std::string describe() const;

  friend bool operator==(const LearnerConfig&, const LearnerConfig&) = default;
};

// Number of candidate features examined per split for a `dim`-wide input.
std::size_t features_per_split(MaxFeatures m, std::size_t dim);

// Training rows. Test rows never pass through this type, which is the only
// input oversample() accepts.
struct TrainingSet {
  std::vector<SparseVector> X;
  std::vector<Polarity> y;

  std::size_t size() const { return y.size(); }
  std::array<std::size_t, kNumClasses> class_counts() const;
};

// Node arrays of one binary tree; node 0 is the root. Internal nodes route
// x[feature] <= threshold to `left`.
struct Tree {
  std::vector<std::int32_t> feature;  // -1 on leaves
  std::vector<double> threshold;
  std::vector<std::int32_t> left;
  std::vector<std::int32_t> right;
  // Random forest: class distribution per node (sums to 1 on leaves), in
  // kClassOrder. Gradient boosting: value[0] is the leaf score.
  std::vector<std::array<double, kNumClasses>> value;

  std::size_t node_count() const { return feature.size(); }
  std::size_t depth() const;
  // Index of the leaf `x` lands in.
  std::size_t leaf_for(const SparseVector& x) const;

  friend bool operator==(const Tree&, const Tree&) = default;
};

class TrainedModel {
 public:
  TrainedModel() = default;

  const LearnerConfig& config() const { return config_; }
  std::size_t dim() const { return dim_; }
  // Majority class of the training labels (ties by class order); returned
  // for inputs with no non-zero feature.
  Polarity fallback() const { return fallback_; }

  // Random forest: one tree per estimator. Gradient boosting: stages laid
  // out as [stage][class] flattened.
  std::span<const Tree> trees() const { return trees_; }
  std::span<const double> initial_scores() const { return init_; }

  // Averaged leaf distributions (forest) or normalized one-vs-rest
  // probabilities (gbt). Throws LayoutError on a dimension mismatch.
  std::array<double, kNumClasses> predict_proba(const SparseVector& x) const;
  // Argmax of predict_proba; ties go to the earlier class in kClassOrder.
  Polarity predict(const SparseVector& x) const;

  // Versioned JSON document. Doubles are written in round-trip precision.
  std::string to_json() const;
  static TrainedModel from_json(std::string_view text,
                                std::string_view source = "<memory>");

  friend bool operator==(const TrainedModel&, const TrainedModel&) = default;

 private:
  friend TrainedModel fit(const TrainingSet&, const LearnerConfig&);
  friend class ModelAccess;

  LearnerConfig config_;
  std::size_t dim_ = 0;
  Polarity fallback_ = Polarity::kNeutral;
  std::vector<Tree> trees_;
  std::array<double, kNumClasses> init_{};
};

// Fits a random forest (bootstrap per tree, Gini splits over a per-node
// random feature subset, midpoint thresholds) or a one-vs-rest gradient
// boosted ensemble of stumps. Deterministic for a fixed config seed.
//
// Throws TrainingError when there are fewer than two rows or fewer than two
// classes present, LayoutError when row dimensions disagree.
TrainedModel fit(const TrainingSet& data, const LearnerConfig& cfg);

// Duplicate-to-parity appends each minority class's rows, in a seeded
// cyclic order, until every present class matches the majority count.
TrainingSet oversample(TrainingSet data, OversampleStrategy strategy,
                       std::uint64_t seed = kDefaultSeed);

Polarity argmax(const std::array<double, kNumClasses>& scores);

}  // namespace sentisead::learner

#endif  // SENTISEAD_LEARNER_H_

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


#include "sentisead/learner.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "sentisead/csv.h"
#include "sentisead/error.h"
#include "tree_builder.h"

namespace sentisead {

double SparseVector::at(std::uint32_t index) const {
  auto it = std::lower_bound(indices.begin(), indices.end(), index);
  if (it == indices.end() || *it != index) return 0.0;
  return values[static_cast<std::size_t>(it - indices.begin())];
}

void SparseVector::push(std::uint32_t index, double value) {
  if (value == 0.0) return;
  indices.push_back(index);
  values.push_back(value);
}

std::vector<double> SparseVector::dense() const {
  std::vector<double> out(dim, 0.0);
  for (std::size_t k = 0; k < indices.size(); ++k) out[indices[k]] = values[k];
  return out;
}

namespace learner {

std::string_view to_string(Algorithm a) {
  return a == Algorithm::kRandomForest ? "random_forest" : "gbt";
}

std::string_view to_string(MaxFeatures m) {
  switch (m) {
    case MaxFeatures::kSqrt: return "sqrt";
    case MaxFeatures::kLog2: return "log2";
    case MaxFeatures::kAll: return "all";
  }
  return "sqrt";
}

std::string_view to_string(OversampleStrategy s) {
  return s == OversampleStrategy::kNone ? "none" : "duplicate-to-parity";
}

Algorithm parse_algorithm(std::string_view s) {
  std::string t = to_lower(trim(s));
  if (t == "random_forest" || t == "rf") return Algorithm::kRandomForest;
  if (t == "gbt") return Algorithm::kGbt;
  throw ConfigError("unknown algorithm '" + std::string(s) +
                    "' (random_forest, gbt)");
}

MaxFeatures parse_max_features(std::string_view s) {
  std::string t = to_lower(trim(s));
  if (t == "sqrt") return MaxFeatures::kSqrt;
  if (t == "log2") return MaxFeatures::kLog2;
  if (t == "all") return MaxFeatures::kAll;
  throw ConfigError("unknown max_features '" + std::string(s) +
                    "' (sqrt, log2, all)");
}

OversampleStrategy parse_oversample(std::string_view s) {
  std::string t = to_lower(trim(s));
  if (t == "none") return OversampleStrategy::kNone;
  if (t == "duplicate-to-parity") return OversampleStrategy::kDuplicateToParity;
  throw ConfigError("unknown oversampling strategy '" + std::string(s) +
                    "' (none, duplicate-to-parity)");
}

void LearnerConfig::validate() const {
  if (n_trees < 1) throw ConfigError("n_trees must be >= 1");
  if (max_depth && *max_depth < 1) throw ConfigError("max_depth must be >= 1");
  if (min_leaf < 1) throw ConfigError("min_leaf must be >= 1");
  if (algorithm == Algorithm::kGbt &&
      !(learning_rate > 0.0 && learning_rate <= 1.0)) {
    throw ConfigError("learning_rate must be in (0, 1]");
  }
}

std::string LearnerConfig::describe() const {
  std::ostringstream os;
  os << to_string(algorithm) << " n_trees=" << n_trees
     << " max_depth=" << (max_depth ? std::to_string(*max_depth) : "none")
     << " min_leaf=" << min_leaf << " max_features=" << to_string(max_features);
  if (algorithm == Algorithm::kGbt) os << " learning_rate=" << learning_rate;
  os << " seed=" << seed;
  return os.str();
}

std::size_t features_per_split(MaxFeatures m, std::size_t dim) {
  if (dim == 0) return 0;
  double d = static_cast<double>(dim);
  std::size_t n = dim;
  switch (m) {
    case MaxFeatures::kSqrt: n = static_cast<std::size_t>(std::sqrt(d)); break;
    case MaxFeatures::kLog2: n = static_cast<std::size_t>(std::log2(d)); break;
    case MaxFeatures::kAll: n = dim; break;
  }
  return std::clamp<std::size_t>(n, 1, dim);
}

std::array<std::size_t, kNumClasses> TrainingSet::class_counts() const {
  std::array<std::size_t, kNumClasses> counts{};
  for (Polarity p : y) ++counts[class_index(p)];
  return counts;
}

std::size_t Tree::depth() const {
  if (feature.empty()) return 0;
  std::vector<std::size_t> d(feature.size(), 0);
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < feature.size(); ++i) {
    if (feature[i] < 0) {
      deepest = std::max(deepest, d[i]);
      continue;
    }
    d[static_cast<std::size_t>(left[i])] = d[i] + 1;
    d[static_cast<std::size_t>(right[i])] = d[i] + 1;
  }
  return deepest;
}

std::size_t Tree::leaf_for(const SparseVector& x) const {
  std::size_t node = 0;
  while (feature[node] >= 0) {
    double v = x.at(static_cast<std::uint32_t>(feature[node]));
    node = static_cast<std::size_t>(v <= threshold[node] ? left[node]
                                                         : right[node]);
  }
  return node;
}

Polarity argmax(const std::array<double, kNumClasses>& scores) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < kNumClasses; ++c) {
    if (scores[c] > scores[best]) best = c;
  }
  return class_at(best);
}

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

Polarity majority_of(std::span<const Polarity> y) {
  std::array<double, kNumClasses> counts{};
  for (Polarity p : y) counts[class_index(p)] += 1;
  return argmax(counts);
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested ? requested : std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  return static_cast<unsigned>(std::min<std::size_t>(n, jobs));
}

// Runs body(i) for i in [0, n) on `threads` workers; rethrows the first
// failure.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body body) {
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::array<double, kNumClasses> TrainedModel::predict_proba(
    const SparseVector& x) const {
  if (x.dim != dim_) {
    throw LayoutError("feature vector has " + std::to_string(x.dim) +
                      " columns, model expects " + std::to_string(dim_));
  }
  std::array<double, kNumClasses> p{};
  if (config_.algorithm == Algorithm::kRandomForest) {
    for (const Tree& t : trees_) {
      const auto& dist = t.value[t.leaf_for(x)];
      for (std::size_t c = 0; c < kNumClasses; ++c) p[c] += dist[c];
    }
    for (double& v : p) v /= static_cast<double>(trees_.size());
    return p;
  }
  std::array<double, kNumClasses> score = init_;
  const double lr = config_.learning_rate;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    const Tree& t = trees_[i];
    score[i % kNumClasses] += lr * t.value[t.leaf_for(x)][0];
  }
  double total = 0;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    p[c] = sigmoid(score[c]);
    total += p[c];
  }
  for (double& v : p) v /= total;
  return p;
}

Polarity TrainedModel::predict(const SparseVector& x) const {
  if (x.dim != dim_) {
    throw LayoutError("feature vector has " + std::to_string(x.dim) +
                      " columns, model expects " + std::to_string(dim_));
  }
  if (x.nnz() == 0) return fallback_;
  return argmax(predict_proba(x));
}

TrainedModel fit(const TrainingSet& data, const LearnerConfig& cfg) {
  cfg.validate();
  if (data.X.size() != data.y.size()) {
    throw LayoutError("training set has " + std::to_string(data.X.size()) +
                      " rows but " + std::to_string(data.y.size()) + " labels");
  }
  if (data.size() < 2) {
    throw TrainingError("training needs at least 2 rows, got " +
                        std::to_string(data.size()));
  }
  auto counts = data.class_counts();
  if (std::count_if(counts.begin(), counts.end(),
                    [](std::size_t c) { return c > 0; }) < 2) {
    throw TrainingError("training labels contain a single class");
  }
  const std::size_t dim = data.X.front().dim;
  for (std::size_t i = 0; i < data.X.size(); ++i) {
    if (data.X[i].dim != dim) {
      throw LayoutError("training row " + std::to_string(i) + " has " +
                        std::to_string(data.X[i].dim) + " columns, expected " +
                        std::to_string(dim));
    }
  }

  TrainedModel model;
  model.config_ = cfg;
  model.dim_ = dim;
  model.fallback_ = majority_of(data.y);

  const std::size_t n = data.size();
  std::vector<std::uint8_t> classes(n);
  for (std::size_t i = 0; i < n; ++i) {
    classes[i] = static_cast<std::uint8_t>(class_index(data.y[i]));
  }

  if (cfg.algorithm == Algorithm::kRandomForest) {
    const std::size_t n_trees = static_cast<std::size_t>(cfg.n_trees);
    model.trees_.resize(n_trees);
    parallel_for(n_trees, worker_count(cfg.threads, n_trees),
                 [&](std::size_t t) {
                   Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
                   std::vector<std::uint32_t> weights(n, 0);
                   for (std::size_t i = 0; i < n; ++i) ++weights[rng.below(n)];
                   model.trees_[t] = internal::grow_classification_tree(
                       data.X, classes, weights, dim, cfg, rng);
                 });
    return model;
  }

  // One-vs-rest boosting of stumps under binomial deviance.
  const auto cols = internal::sorted_columns(data.X, dim);
  std::array<std::vector<double>, kNumClasses> score;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    double prior = static_cast<double>(counts[c]) / static_cast<double>(n);
    prior = std::clamp(prior, 1e-6, 1.0 - 1e-6);
    model.init_[c] = std::log(prior / (1.0 - prior));
    score[c].assign(n, model.init_[c]);
  }
  std::vector<double> residual(n), hessian(n);
  model.trees_.reserve(static_cast<std::size_t>(cfg.n_trees) * kNumClasses);
  for (int stage = 0; stage < cfg.n_trees; ++stage) {
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        double p = sigmoid(score[c][i]);
        residual[i] = (classes[i] == c ? 1.0 : 0.0) - p;
        hessian[i] = p * (1.0 - p);
      }
      Tree stump = internal::fit_stump(cols, residual, hessian, cfg.min_leaf);
      for (std::size_t i = 0; i < n; ++i) {
        score[c][i] += cfg.learning_rate * stump.value[stump.leaf_for(data.X[i])][0];
      }
      model.trees_.push_back(std::move(stump));
    }
  }
  return model;
}

TrainingSet oversample(TrainingSet data, OversampleStrategy strategy,
                       std::uint64_t seed) {
  if (strategy == OversampleStrategy::kNone) return data;
  std::array<std::vector<std::size_t>, kNumClasses> members;
  for (std::size_t i = 0; i < data.size(); ++i) {
    members[class_index(data.y[i])].push_back(i);
  }
  std::size_t target = 0;
  for (const auto& m : members) target = std::max(target, m.size());

  for (std::size_t c = 0; c < kNumClasses; ++c) {
    auto& rows = members[c];
    if (rows.empty() || rows.size() == target) continue;
    Rng rng(derive_seed(seed, "oversample:" + std::string(to_string(class_at(c)))));
    std::vector<std::size_t> cycle = rows;
    rng.shuffle(std::span<std::size_t>(cycle));
    for (std::size_t k = 0; rows.size() + k < target; ++k) {
      std::size_t src = cycle[k % cycle.size()];
      data.X.push_back(data.X[src]);
      data.y.push_back(data.y[src]);
    }
  }
  return data;
}

}  // namespace learner
}  // namespace sentisead

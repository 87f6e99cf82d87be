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


#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "tree_builder.h"

namespace sentisead::learner::internal {
namespace {

using ClassWeights = std::array<double, kNumClasses>;

double weight_sum(const ClassWeights& w) { return w[0] + w[1] + w[2]; }

double gini_proxy(const ClassWeights& w) {
  double total = weight_sum(w);
  if (total <= 0) return 0;
  return (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]) / total;
}

std::int32_t add_node(Tree& t) {
  t.feature.push_back(-1);
  t.threshold.push_back(0.0);
  t.left.push_back(-1);
  t.right.push_back(-1);
  t.value.push_back({});
  return static_cast<std::int32_t>(t.feature.size() - 1);
}

// Midpoint that stays strictly below `hi`.
double midpoint(double lo, double hi) {
  double mid = lo + (hi - lo) / 2.0;
  if (mid >= hi) mid = lo;
  return mid;
}

struct Candidate {
  bool found = false;
  std::uint32_t feature = 0;
  double threshold = 0;
  double proxy = -std::numeric_limits<double>::infinity();
};

struct NodeEntry {
  double value;
  std::uint32_t row;
};

// Per-tree scratch space.
class Splitter {
 public:
  Splitter(std::span<const SparseVector> X,
           std::span<const std::uint8_t> classes,
           std::span<const std::uint32_t> weights, std::size_t dim,
           const LearnerConfig& cfg, Rng& rng)
      : X_(X),
        classes_(classes),
        weights_(weights),
        cfg_(cfg),
        rng_(rng),
        count_(dim, 0),
        offset_(dim, 0),
        per_split_(features_per_split(cfg.max_features, dim)) {}

  Candidate find(std::span<const std::uint32_t> rows,
                 const ClassWeights& total) {
    // Bucket the node's non-zero entries by feature.
    touched_.clear();
    std::size_t nnz = 0;
    for (std::uint32_t r : rows) {
      for (std::uint32_t f : X_[r].indices) {
        if (count_[f]++ == 0) touched_.push_back(f);
      }
      nnz += X_[r].nnz();
    }
    std::sort(touched_.begin(), touched_.end());
    std::uint32_t acc = 0;
    for (std::uint32_t f : touched_) {
      offset_[f] = acc;
      acc += count_[f];
    }
    entries_.resize(nnz);
    for (std::uint32_t r : rows) {
      const SparseVector& x = X_[r];
      for (std::size_t k = 0; k < x.nnz(); ++k) {
        entries_[offset_[x.indices[k]]++] = {x.values[k], r};
      }
    }
    // offset_ now marks the end of each bucket.

    Candidate best;
    std::size_t evaluated = 0;
    const std::size_t n_rows = rows.size();
    std::size_t remaining = touched_.size();
    while (remaining > 0 && evaluated < per_split_) {
      std::size_t pick = rng_.below(remaining);
      std::swap(touched_[pick], touched_[remaining - 1]);
      std::uint32_t f = touched_[remaining - 1];
      --remaining;

      std::size_t end = offset_[f];
      std::size_t begin = end - count_[f];
      std::span<NodeEntry> bucket(entries_.data() + begin, end - begin);
      std::sort(bucket.begin(), bucket.end(),
                [](const NodeEntry& a, const NodeEntry& b) {
                  return a.value < b.value ||
                         (a.value == b.value && a.row < b.row);
                });
      const std::size_t zeros = n_rows - bucket.size();
      if (zeros == 0 && bucket.front().value == bucket.back().value) {
        continue;  // constant in this node
      }
      ++evaluated;
      evaluate(f, bucket, zeros, total, best);
    }
    for (std::uint32_t f : touched_) count_[f] = 0;
    return best;
  }

 private:
  void evaluate(std::uint32_t feature, std::span<const NodeEntry> bucket,
                std::size_t zeros, const ClassWeights& total,
                Candidate& best) const {
    ClassWeights zero_w = total;
    for (const NodeEntry& e : bucket) {
      zero_w[classes_[e.row]] -= weights_[e.row];
    }
    const std::size_t n_rows = bucket.size() + zeros;
    const std::size_t min_leaf = static_cast<std::size_t>(cfg_.min_leaf);

    ClassWeights left{};
    std::size_t left_rows = 0;
    bool zero_done = zeros == 0;
    std::size_t i = 0;
    double prev_value = 0;
    bool have_prev = false;

    auto consider = [&](double next_value) {
      if (!have_prev || next_value == prev_value) return;
      std::size_t right_rows = n_rows - left_rows;
      if (left_rows < min_leaf || right_rows < min_leaf) return;
      ClassWeights right;
      for (std::size_t c = 0; c < kNumClasses; ++c) right[c] = total[c] - left[c];
      double proxy = gini_proxy(left) + gini_proxy(right);
      if (proxy > best.proxy) {
        best.found = true;
        best.feature = feature;
        best.threshold = midpoint(prev_value, next_value);
        best.proxy = proxy;
      }
    };

    while (i < bucket.size() || !zero_done) {
      double v;
      bool take_zero = !zero_done && (i == bucket.size() || bucket[i].value > 0);
      v = take_zero ? 0.0 : bucket[i].value;
      consider(v);
      if (take_zero) {
        for (std::size_t c = 0; c < kNumClasses; ++c) left[c] += zero_w[c];
        left_rows += zeros;
        zero_done = true;
      } else {
        while (i < bucket.size() && bucket[i].value == v) {
          left[classes_[bucket[i].row]] += weights_[bucket[i].row];
          ++left_rows;
          ++i;
        }
      }
      prev_value = v;
      have_prev = true;
    }
  }

  std::span<const SparseVector> X_;
  std::span<const std::uint8_t> classes_;
  std::span<const std::uint32_t> weights_;
  const LearnerConfig& cfg_;
  Rng& rng_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> offset_;
  std::vector<std::uint32_t> touched_;
  std::vector<NodeEntry> entries_;
  std::size_t per_split_;
};

}  // namespace

Tree grow_classification_tree(std::span<const SparseVector> X,
                              std::span<const std::uint8_t> classes,
                              std::span<const std::uint32_t> weights,
                              std::size_t dim, const LearnerConfig& cfg,
                              Rng& rng) {
  std::vector<std::uint32_t> order;
  for (std::uint32_t r = 0; r < weights.size(); ++r) {
    if (weights[r] > 0) order.push_back(r);
  }

  Tree tree;
  Splitter splitter(X, classes, weights, dim, cfg, rng);
  struct Work {
    std::int32_t node;
    std::size_t begin, end;
    int depth;
  };
  std::vector<Work> stack;
  stack.push_back({add_node(tree), 0, order.size(), 0});
  const std::size_t min_leaf = static_cast<std::size_t>(cfg.min_leaf);

  while (!stack.empty()) {
    Work w = stack.back();
    stack.pop_back();
    std::span<std::uint32_t> rows(order.data() + w.begin, w.end - w.begin);

    ClassWeights total{};
    for (std::uint32_t r : rows) total[classes[r]] += weights[r];
    const double sum = weight_sum(total);
    auto& dist = tree.value[w.node];
    for (std::size_t c = 0; c < kNumClasses; ++c) dist[c] = total[c] / sum;

    bool pure = std::count_if(total.begin(), total.end(),
                              [](double x) { return x > 0; }) <= 1;
    bool depth_cap = cfg.max_depth && w.depth >= *cfg.max_depth;
    if (pure || depth_cap || rows.size() < 2 * min_leaf) continue;

    Candidate best = splitter.find(rows, total);
    if (!best.found) continue;

    auto goes_left = [&](std::uint32_t r) {
      return X[r].at(best.feature) <= best.threshold;
    };
    auto mid = std::stable_partition(rows.begin(), rows.end(), goes_left);
    std::size_t n_left = static_cast<std::size_t>(mid - rows.begin());
    if (n_left == 0 || n_left == rows.size()) continue;

    std::int32_t left = add_node(tree);
    std::int32_t right = add_node(tree);
    tree.feature[w.node] = static_cast<std::int32_t>(best.feature);
    tree.threshold[w.node] = best.threshold;
    tree.left[w.node] = left;
    tree.right[w.node] = right;
    stack.push_back({right, w.begin + n_left, w.end, w.depth + 1});
    stack.push_back({left, w.begin, w.begin + n_left, w.depth + 1});
  }
  return tree;
}

Columns sorted_columns(std::span<const SparseVector> X, std::size_t dim) {
  Columns cols;
  cols.by_feature.resize(dim);
  for (std::uint32_t r = 0; r < X.size(); ++r) {
    const SparseVector& x = X[r];
    for (std::size_t k = 0; k < x.nnz(); ++k) {
      cols.by_feature[x.indices[k]].push_back({x.values[k], r});
    }
  }
  for (auto& col : cols.by_feature) {
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) {
      return a.value < b.value || (a.value == b.value && a.row < b.row);
    });
  }
  return cols;
}

Tree fit_stump(const Columns& cols, std::span<const double> residuals,
               std::span<const double> hessians, int min_leaf) {
  const std::size_t n = residuals.size();
  const double g_total = std::accumulate(residuals.begin(), residuals.end(), 0.0);
  const double h_total = std::accumulate(hessians.begin(), hessians.end(), 0.0);
  const std::size_t min_rows = static_cast<std::size_t>(min_leaf);

  auto leaf_value = [](double g, double h) {
    return g / std::max(h, 1e-12);
  };

  struct Best {
    bool found = false;
    std::uint32_t feature = 0;
    double threshold = 0;
    double gain = -std::numeric_limits<double>::infinity();
    double g_left = 0, h_left = 0;
  } best;

  for (std::uint32_t f = 0; f < cols.by_feature.size(); ++f) {
    const auto& col = cols.by_feature[f];
    if (col.empty()) continue;
    double g_nz = 0, h_nz = 0;
    for (const auto& e : col) {
      g_nz += residuals[e.row];
      h_nz += hessians[e.row];
    }
    const std::size_t zeros = n - col.size();
    const double g_zero = g_total - g_nz;
    const double h_zero = h_total - h_nz;

    double gl = 0, hl = 0;
    std::size_t nl = 0;
    bool zero_done = zeros == 0;
    bool have_prev = false;
    double prev = 0;
    std::size_t i = 0;
    while (i < col.size() || !zero_done) {
      bool take_zero = !zero_done && (i == col.size() || col[i].value > 0);
      double v = take_zero ? 0.0 : col[i].value;
      if (have_prev && v != prev && nl >= min_rows && n - nl >= min_rows) {
        double gr = g_total - gl;
        double gain = gl * gl / static_cast<double>(nl) +
                      gr * gr / static_cast<double>(n - nl);
        if (gain > best.gain) {
          best = {true, f, midpoint(prev, v), gain, gl, hl};
        }
      }
      if (take_zero) {
        gl += g_zero;
        hl += h_zero;
        nl += zeros;
        zero_done = true;
      } else {
        while (i < col.size() && col[i].value == v) {
          gl += residuals[col[i].row];
          hl += hessians[col[i].row];
          ++nl;
          ++i;
        }
      }
      prev = v;
      have_prev = true;
    }
  }

  Tree t;
  std::int32_t root = add_node(t);
  t.value[root][0] = leaf_value(g_total, h_total);
  if (!best.found) return t;
  std::int32_t left = add_node(t);
  std::int32_t right = add_node(t);
  t.feature[root] = static_cast<std::int32_t>(best.feature);
  t.threshold[root] = best.threshold;
  t.left[root] = left;
  t.right[root] = right;
  t.value[left][0] = leaf_value(best.g_left, best.h_left);
  t.value[right][0] =
      leaf_value(g_total - best.g_left, h_total - best.h_left);
  return t;
}

}  // namespace sentisead::learner::internal

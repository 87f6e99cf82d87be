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


#include "sentisead/sweep.h"

#include <charconv>

#include "sentisead/csv.h"
#include "sentisead/error.h"

namespace sentisead::learner {

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  const std::string_view t = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError("grid parameter '" + std::string(key) +
                      "': cannot parse '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

LearnerConfig apply_point(
    LearnerConfig base,
    const std::vector<std::pair<std::string, std::string>>& point) {
  for (const auto& [key, value] : point) {
    if (key == "algorithm") {
      base.algorithm = parse_algorithm(value);
    } else if (key == "n_trees") {
      base.n_trees = parse_number<int>(key, value);
    } else if (key == "max_depth") {
      if (to_lower(trim(value)) == "none") {
        base.max_depth.reset();
      } else {
        base.max_depth = parse_number<int>(key, value);
      }
    } else if (key == "min_leaf") {
      base.min_leaf = parse_number<int>(key, value);
    } else if (key == "max_features") {
      base.max_features = parse_max_features(value);
    } else if (key == "learning_rate") {
      base.learning_rate = parse_number<double>(key, value);
    } else if (key == "seed") {
      base.seed = parse_number<std::uint64_t>(key, value);
    } else {
      throw ConfigError("unknown grid parameter '" + key + "'");
    }
  }
  base.validate();
  return base;
}

std::vector<std::vector<std::pair<std::string, std::string>>> grid_points(
    const Grid& grid) {
  std::vector<std::vector<std::pair<std::string, std::string>>> points = {{}};
  for (const auto& [key, values] : grid) {
    if (values.empty()) {
      throw ConfigError("grid parameter '" + key + "' has no values");
    }
    std::vector<std::vector<std::pair<std::string, std::string>>> next;
    next.reserve(points.size() * values.size());
    for (const auto& p : points) {
      for (const std::string& v : values) {
        auto q = p;
        q.emplace_back(key, v);
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

SweepResult grid_sweep(const Dataset& d, const FoldAssignment& folds,
                       const PredictionMatrix& matrix, const Grid& grid,
                       const EnsembleSpec& spec, const FeatureContext& ctx) {
  if (grid.empty()) throw ConfigError("grid sweep needs at least one parameter");
  SweepResult result;
  std::optional<double> best;
  for (const auto& point : grid_points(grid)) {
    EnsembleSpec s = spec;
    s.learner = apply_point(spec.learner, point);
    const CrossValidatedRun run = ensemble::train_sentisead(d, folds, matrix, s, ctx);
    const double f1 =
        eval::metrics(eval::confusion(run.gold, run.predicted)).macro_f1;
    if (!best || f1 > *best) {
      best = f1;
      result.best = s.learner;
    }
    result.table.push_back(SweepRow{s.learner, point, f1});
  }
  return result;
}

}  // namespace sentisead::learner

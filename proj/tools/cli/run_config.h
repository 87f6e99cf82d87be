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


#ifndef SENTISEAD_TOOLS_CLI_RUN_CONFIG_H_
#define SENTISEAD_TOOLS_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sentisead/detectors.h"
#include "sentisead/ensemble.h"
#include "sentisead/features.h"
#include "sentisead/learner.h"

namespace sentisead::cli {

struct DetectorEntry {
  std::string name;
  DetectorKind kind = DetectorKind::kDso;
  std::filesystem::path lexicon;      // dso, valence
  std::filesystem::path rules;        // pattern
  std::filesystem::path predictions;  // external
  int negation_window = detectors::kDefaultNegationWindow;
  learner::LearnerConfig learner;     // bow
  bool learner_seed_set = false;
  learner::OversampleStrategy oversample =
      learner::OversampleStrategy::kDuplicateToParity;
};

struct RunConfig {
  std::filesystem::path source;  // config file, empty when built in code
  std::filesystem::path dataset;
  std::string dataset_name;
  int k = 10;
  std::optional<std::uint64_t> fold_seed;
  std::vector<DetectorEntry> roster;

  std::vector<std::string> ensemble_roster;  // empty: every roster member
  Variant variant;
  learner::LearnerConfig ensemble_learner;
  bool ensemble_seed_set = false;
  learner::OversampleStrategy ensemble_oversample =
      learner::OversampleStrategy::kNone;
  DetectorEntry partial_base;
  std::vector<std::filesystem::path> sentiment_lexicons;

  TieRule tie_rule = TieRule::kNeutral;
  std::uint64_t seed = kDefaultSeed;
  std::filesystem::path out = "out";

  RunConfig();

  static RunConfig load(const std::filesystem::path& path);
  // Relative paths resolve against base_dir.
  static RunConfig parse(std::string_view json_text,
                         const std::filesystem::path& base_dir,
                         std::string_view source = "<memory>");

  // Checks every referenced file exists; throws ConfigError naming it.
  void validate() const;

  std::string name() const;
  std::uint64_t folds_seed() const;
  learner::LearnerConfig detector_learner(const DetectorEntry& e) const;
  learner::LearnerConfig stacker_learner() const;
  std::vector<std::string> stacker_roster() const;
  EnsembleSpec ensemble_spec() const;
  const DetectorEntry* find(std::string_view name) const;
};

std::filesystem::path bundled(std::string_view file);

learner::LearnerConfig json_learner(const nlohmann::json& j);

// Rule-based and external detectors; bow needs training and is built by
// the detect command.
std::shared_ptr<const Detector> make_detector(const DetectorEntry& e);

FeatureContext make_feature_context(const RunConfig& cfg);

}  // namespace sentisead::cli

#endif  // SENTISEAD_TOOLS_CLI_RUN_CONFIG_H_

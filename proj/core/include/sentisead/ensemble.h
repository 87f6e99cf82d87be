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


#ifndef SENTISEAD_ENSEMBLE_H_
#define SENTISEAD_ENSEMBLE_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sentisead/corpus.h"
#include "sentisead/eval.h"
#include "sentisead/features.h"
#include "sentisead/learner.h"
#include "sentisead/vocabulary.h"

namespace sentisead {

enum class TieRule { kNeutral, kPriorityOrder, kAbstainError };

std::string_view to_string(TieRule rule);
TieRule parse_tie_rule(std::string_view s);

struct VotePolicy {
  std::vector<std::string> roster;
  TieRule tie_rule = TieRule::kNeutral;

  // Throws ConfigError for an empty roster or repeated names.
  void validate() const;
};

struct EnsembleSpec {
  std::vector<std::string> roster;
  Variant variant;
  learner::LearnerConfig learner;
  learner::OversampleStrategy oversample = learner::OversampleStrategy::kNone;

  void validate() const;
};

// Stacker predictions from a cross-validated run, in dataset order.
struct CrossValidatedRun {
  std::vector<std::string> ids;
  std::vector<Polarity> gold;
  std::vector<Polarity> predicted;
  std::vector<int> test_fold;  // rotation that predicted each unit
  // Vocabulary fitted in each rotation (empty vocabularies for variants
  // without a bag-of-words block).
  std::vector<Vocabulary> vocabularies;
};

// A stacker trained on a full dataset, ready for inference.
struct EnsembleBundle {
  static constexpr int kFormatVersion = 1;

  std::vector<std::string> roster;
  Variant variant;
  Vocabulary vocabulary;
  learner::TrainedModel model;
  FeatureContext context;

  std::string to_json() const;
  static EnsembleBundle from_json(std::string_view text,
                                  std::string_view source = "<memory>");
  void save(const std::filesystem::path& path) const;
  static EnsembleBundle load(const std::filesystem::path& path);
};

namespace ensemble {

// Modal label. Ties: kNeutral answers neutral, kPriorityOrder answers the
// tied label emitted by the earliest roster member, kAbstainError throws
// TieError carrying the tied labels.
Polarity majority_vote(std::span<const Polarity> labels,
                       const VotePolicy& policy);

// Votes every row of the matrix over the policy roster.
std::vector<Polarity> vote_matrix(const PredictionMatrix& pm,
                                  const VotePolicy& policy);

// For each rotation: fit the vocabulary and the learner on the training
// folds, predict the test fold. The matrix must cover every roster member
// for every dataset unit, and its fold fingerprint (when recorded) must
// equal that of `folds`.
CrossValidatedRun train_sentisead(const Dataset& d,
                                  const FoldAssignment& folds,
                                  const PredictionMatrix& matrix,
                                  const EnsembleSpec& spec,
                                  const FeatureContext& ctx);

// Fits the stacker on every unit of `d`.
EnsembleBundle train_bundle(const Dataset& d, const PredictionMatrix& matrix,
                            const EnsembleSpec& spec,
                            const FeatureContext& ctx);

// Throws CoverageError when a roster member has no label.
Polarity predict_sentisead(
    const EnsembleBundle& bundle, std::string_view text,
    const std::unordered_map<std::string, Polarity>& labels);

}  // namespace ensemble
}  // namespace sentisead

#endif  // SENTISEAD_ENSEMBLE_H_

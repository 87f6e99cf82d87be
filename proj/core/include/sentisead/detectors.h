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


#ifndef SENTISEAD_DETECTORS_H_
#define SENTISEAD_DETECTORS_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sentisead/corpus.h"
#include "sentisead/learner.h"
#include "sentisead/lexicon.h"
#include "sentisead/polarity.h"
#include "sentisead/textprep.h"
#include "sentisead/vocabulary.h"

namespace sentisead {

enum class DetectorKind { kDso, kValence, kPattern, kBow, kExternal };

std::string_view to_string(DetectorKind kind);
DetectorKind parse_detector_kind(std::string_view s);
// dso, valence and pattern need no training.
bool is_rule_based(DetectorKind kind);

class Detector {
 public:
  virtual ~Detector() = default;

  const std::string& name() const { return name_; }
  DetectorKind kind() const { return kind_; }

  virtual Polarity classify(const Unit& unit) const = 0;

 protected:
  Detector(std::string name, DetectorKind kind)
      : name_(std::move(name)), kind_(kind) {}

 private:
  std::string name_;
  DetectorKind kind_;
};

namespace detectors {

inline constexpr int kDefaultNegationWindow = 3;

// Sums +1/-1 scores of lexicon words; a score flips sign when a negation
// word occurs within the `negation_window` tokens before it.
Polarity dso_classify(std::string_view text, const SentimentLexicon& lex,
                      int negation_window = kDefaultNegationWindow);

// max positive score (default +1) plus min negative score (default -1).
Polarity valence_classify(std::string_view text, const SentimentLexicon& lex);

struct PatternMatch {
  std::size_t rule = 0;  // index into the rule list
  std::size_t aspect_position = 0;
  std::size_t cue_position = 0;
};

// First rule, in file order, that fires.
std::optional<PatternMatch> pattern_match(std::string_view text,
                                          std::span<const PatternRule> rules);
Polarity pattern_classify(std::string_view text,
                          std::span<const PatternRule> rules);

}  // namespace detectors

class DsoDetector final : public Detector {
 public:
  DsoDetector(std::string name, std::shared_ptr<const SentimentLexicon> lex,
              int negation_window = detectors::kDefaultNegationWindow);

  Polarity classify(const Unit& unit) const override;
  const SentimentLexicon& lexicon() const { return *lex_; }
  int negation_window() const { return window_; }

 private:
  std::shared_ptr<const SentimentLexicon> lex_;
  int window_;
};

class ValenceDetector final : public Detector {
 public:
  ValenceDetector(std::string name,
                  std::shared_ptr<const SentimentLexicon> lex);

  Polarity classify(const Unit& unit) const override;
  const SentimentLexicon& lexicon() const { return *lex_; }

 private:
  std::shared_ptr<const SentimentLexicon> lex_;
};

class PatternDetector final : public Detector {
 public:
  PatternDetector(std::string name, std::vector<PatternRule> rules);

  Polarity classify(const Unit& unit) const override;
  std::span<const PatternRule> rules() const { return rules_; }

 private:
  std::vector<PatternRule> rules_;
};

struct BowConfig {
  learner::LearnerConfig learner;
  learner::OversampleStrategy oversample =
      learner::OversampleStrategy::kDuplicateToParity;
};

// Supervised bag-of-words detector: preprocessing, TF-IDF over a vocabulary
// fitted on the training units, a tree ensemble on top.
class BowDetector final : public Detector {
 public:
  BowDetector(std::string name, std::shared_ptr<const TextResources> res,
              Vocabulary vocab, learner::TrainedModel model,
              Polarity majority);

  Polarity classify(const Unit& unit) const override;

  const Vocabulary& vocabulary() const { return vocab_; }
  const learner::TrainedModel& model() const { return model_; }
  // Majority class of the (pre-oversampling) training units, answered for
  // texts without any in-vocabulary token.
  Polarity majority() const { return majority_; }

 private:
  std::shared_ptr<const TextResources> res_;
  Vocabulary vocab_;
  learner::TrainedModel model_;
  Polarity majority_;
};

// Answers from a fixed id -> label mapping (predictions of a third-party
// tool).
class ExternalDetector final : public Detector {
 public:
  ExternalDetector(std::string name,
                   std::unordered_map<std::string, Polarity> labels);

  // Throws CoverageError for ids absent from the mapping.
  Polarity classify(const Unit& unit) const override;
  bool covers(std::string_view id) const;
  std::size_t size() const { return labels_.size(); }

 private:
  std::unordered_map<std::string, Polarity> labels_;
};

namespace detectors {

// Throws TrainingError for an empty training set or a single class.
std::unique_ptr<BowDetector> bow_train(
    std::span<const Unit> train, const BowConfig& cfg,
    std::shared_ptr<const TextResources> res, std::string name = "bow",
    std::string fitted_on = "train");

// CSV `id,label`.
std::unique_ptr<ExternalDetector> external_load(
    const std::filesystem::path& path, std::string name);
std::unique_ptr<ExternalDetector> external_parse(
    std::string_view csv_text, std::string name,
    std::string source = "<memory>");

}  // namespace detectors
}  // namespace sentisead

#endif  // SENTISEAD_DETECTORS_H_

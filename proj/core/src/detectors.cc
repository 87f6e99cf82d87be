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


#include "sentisead/detectors.h"

#include <algorithm>
#include <utility>

#include "sentisead/csv.h"
#include "sentisead/error.h"

namespace sentisead {

std::string_view to_string(DetectorKind kind) {
  switch (kind) {
    case DetectorKind::kDso: return "dso";
    case DetectorKind::kValence: return "valence";
    case DetectorKind::kPattern: return "pattern";
    case DetectorKind::kBow: return "bow";
    case DetectorKind::kExternal: return "external";
  }
  return "external";
}

DetectorKind parse_detector_kind(std::string_view s) {
  const std::string t = to_lower(trim(s));
  if (t == "dso") return DetectorKind::kDso;
  if (t == "valence") return DetectorKind::kValence;
  if (t == "pattern") return DetectorKind::kPattern;
  if (t == "bow") return DetectorKind::kBow;
  if (t == "external") return DetectorKind::kExternal;
  throw ConfigError("unknown detector kind '" + std::string(s) +
                    "' (dso, valence, pattern, bow, external)");
}

bool is_rule_based(DetectorKind kind) {
  return kind == DetectorKind::kDso || kind == DetectorKind::kValence ||
         kind == DetectorKind::kPattern;
}

namespace {

Polarity sign_of(int v) {
  if (v > 0) return Polarity::kPositive;
  if (v < 0) return Polarity::kNegative;
  return Polarity::kNeutral;
}

bool contains(const std::vector<std::string>& terms, std::string_view w) {
  return std::find(terms.begin(), terms.end(), w) != terms.end();
}

}  // namespace

namespace detectors {

Polarity dso_classify(std::string_view text, const SentimentLexicon& lex,
                      int negation_window) {
  const std::vector<std::string> words = textprep::word_tokens(text);
  const std::size_t window =
      static_cast<std::size_t>(std::max(negation_window, 0));
  int sum = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto s = lex.score(words[i]);
    if (!s) continue;
    bool negated = false;
    for (std::size_t j = i > window ? i - window : 0; j < i; ++j) {
      if (textprep::is_negation_word(words[j])) {
        negated = true;
        break;
      }
    }
    sum += negated ? -*s : *s;
  }
  return sign_of(sum);
}

Polarity valence_classify(std::string_view text, const SentimentLexicon& lex) {
  int pos = 1;
  int neg = -1;
  for (const std::string& w : textprep::word_tokens(text)) {
    auto s = lex.score(w);
    if (!s) continue;
    pos = std::max(pos, *s);
    neg = std::min(neg, *s);
  }
  return sign_of(pos + neg);
}

std::optional<PatternMatch> pattern_match(std::string_view text,
                                          std::span<const PatternRule> rules) {
  const std::vector<std::string> words = textprep::word_tokens(text);
  for (std::size_t r = 0; r < rules.size(); ++r) {
    const PatternRule& rule = rules[r];
    const std::size_t gap = static_cast<std::size_t>(rule.max_gap);
    for (std::size_t a = 0; a < words.size(); ++a) {
      if (!contains(rule.aspect_terms, words[a])) continue;
      for (std::size_t c = 0; c < words.size(); ++c) {
        if (c == a || !contains(rule.cue_terms, words[c])) continue;
        const bool cue_after = c > a;
        if (rule.order == PatternOrder::kAspectThenCue && !cue_after) continue;
        if (rule.order == PatternOrder::kCueThenAspect && cue_after) continue;
        const std::size_t between = (cue_after ? c - a : a - c) - 1;
        if (between <= gap) return PatternMatch{r, a, c};
      }
    }
  }
  return std::nullopt;
}

Polarity pattern_classify(std::string_view text,
                          std::span<const PatternRule> rules) {
  auto m = pattern_match(text, rules);
  return m ? rules[m->rule].label : Polarity::kNeutral;
}

}  // namespace detectors

DsoDetector::DsoDetector(std::string name,
                         std::shared_ptr<const SentimentLexicon> lex,
                         int negation_window)
    : Detector(std::move(name), DetectorKind::kDso),
      lex_(std::move(lex)),
      window_(negation_window) {
  if (!lex_ || lex_->mode() != LexiconMode::kDso) {
    throw ConfigError("detector '" + this->name() + "' needs a dso lexicon");
  }
  if (window_ < 0) throw ConfigError("negation window must be >= 0");
}

Polarity DsoDetector::classify(const Unit& unit) const {
  return detectors::dso_classify(unit.text, *lex_, window_);
}

ValenceDetector::ValenceDetector(std::string name,
                                 std::shared_ptr<const SentimentLexicon> lex)
    : Detector(std::move(name), DetectorKind::kValence), lex_(std::move(lex)) {
  if (!lex_ || lex_->mode() != LexiconMode::kValence) {
    throw ConfigError("detector '" + this->name() +
                      "' needs a valence lexicon");
  }
}

Polarity ValenceDetector::classify(const Unit& unit) const {
  return detectors::valence_classify(unit.text, *lex_);
}

PatternDetector::PatternDetector(std::string name,
                                 std::vector<PatternRule> rules)
    : Detector(std::move(name), DetectorKind::kPattern),
      rules_(std::move(rules)) {
  for (const PatternRule& r : rules_) r.validate();
}

Polarity PatternDetector::classify(const Unit& unit) const {
  return detectors::pattern_classify(unit.text, rules_);
}

BowDetector::BowDetector(std::string name,
                         std::shared_ptr<const TextResources> res,
                         Vocabulary vocab, learner::TrainedModel model,
                         Polarity majority)
    : Detector(std::move(name), DetectorKind::kBow),
      res_(std::move(res)),
      vocab_(std::move(vocab)),
      model_(std::move(model)),
      majority_(majority) {
  if (!res_) throw ConfigError("bow detector needs text resources");
  if (model_.dim() != vocab_.size()) {
    throw LayoutError("bow model expects " + std::to_string(model_.dim()) +
                      " columns but the vocabulary has " +
                      std::to_string(vocab_.size()));
  }
}

Polarity BowDetector::classify(const Unit& unit) const {
  const auto weights = vocab_.tfidf(textprep::preprocess(unit.text, *res_));
  if (weights.empty()) return majority_;
  SparseVector x;
  x.dim = vocab_.size();
  for (const auto& [col, w] : weights) x.push(col, w);
  return model_.predict(x);
}

ExternalDetector::ExternalDetector(
    std::string name, std::unordered_map<std::string, Polarity> labels)
    : Detector(std::move(name), DetectorKind::kExternal),
      labels_(std::move(labels)) {}

Polarity ExternalDetector::classify(const Unit& unit) const {
  auto it = labels_.find(unit.id);
  if (it == labels_.end()) {
    throw CoverageError("detector '" + name() + "' has no prediction for id '" +
                        unit.id + "'");
  }
  return it->second;
}

bool ExternalDetector::covers(std::string_view id) const {
  return labels_.contains(std::string(id));
}

namespace detectors {

std::unique_ptr<BowDetector> bow_train(std::span<const Unit> train,
                                       const BowConfig& cfg,
                                       std::shared_ptr<const TextResources> res,
                                       std::string name,
                                       std::string fitted_on) {
  if (train.empty()) throw TrainingError("bow detector: empty training set");
  if (!res) throw ConfigError("bow detector needs text resources");

  std::vector<TokenStream> docs;
  docs.reserve(train.size());
  learner::TrainingSet set;
  std::array<double, kNumClasses> counts{};
  for (const Unit& u : train) {
    docs.push_back(textprep::preprocess(u.text, *res));
    set.y.push_back(u.gold);
    counts[class_index(u.gold)] += 1;
  }
  if (std::count_if(counts.begin(), counts.end(),
                    [](double c) { return c > 0; }) < 2) {
    throw TrainingError("bow detector: training labels contain a single class");
  }

  Vocabulary vocab = Vocabulary::fit(docs, std::move(fitted_on));
  set.X.reserve(docs.size());
  for (const TokenStream& doc : docs) {
    SparseVector x;
    x.dim = vocab.size();
    for (const auto& [col, w] : vocab.tfidf(doc)) x.push(col, w);
    set.X.push_back(std::move(x));
  }
  if (vocab.size() == 0) {
    throw TrainingError("bow detector: training texts have no tokens");
  }
  const Polarity majority = learner::argmax(counts);
  set = learner::oversample(std::move(set), cfg.oversample, cfg.learner.seed);
  learner::TrainedModel model = learner::fit(set, cfg.learner);
  return std::make_unique<BowDetector>(std::move(name), std::move(res),
                                       std::move(vocab), std::move(model),
                                       majority);
}

std::unique_ptr<ExternalDetector> external_parse(std::string_view csv_text,
                                                 std::string name,
                                                 std::string source) {
  CsvTable t = parse_csv(csv_text, std::move(source));
  const std::size_t id_col = t.column("id");
  const std::size_t label_col = t.column("label");
  std::unordered_map<std::string, Polarity> labels;
  labels.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    auto label = parse_polarity(row[label_col]);
    if (!label) {
      throw LabelError(t.where(r) + ": unknown label '" + row[label_col] +
                       "' for id '" + row[id_col] + "'");
    }
    if (!labels.emplace(row[id_col], *label).second) {
      throw DuplicateError(t.where(r) + ": duplicate id '" + row[id_col] + "'");
    }
  }
  return std::make_unique<ExternalDetector>(std::move(name), std::move(labels));
}

std::unique_ptr<ExternalDetector> external_load(
    const std::filesystem::path& path, std::string name) {
  return external_parse(read_text_file(path), std::move(name), path.string());
}

}  // namespace detectors
}  // namespace sentisead

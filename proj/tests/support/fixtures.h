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


#ifndef SENTISEAD_TESTS_SUPPORT_FIXTURES_H_
#define SENTISEAD_TESTS_SUPPORT_FIXTURES_H_

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "sentisead/corpus.h"
#include "sentisead/detectors.h"
#include "sentisead/eval.h"
#include "sentisead/features.h"
#include "sentisead/polarity.h"

namespace fixtures {

// Units "u0000".. with the requested number of neg/neu/pos labels, texts
// "text <i>", classes interleaved so ids do not reveal labels.
inline sentisead::Dataset mixed(std::size_t neg, std::size_t neu, std::size_t pos,
                                const std::string& name = "mixed") {
  using sentisead::Polarity;
  std::vector<sentisead::Unit> units;
  std::size_t left[3] = {neg, neu, pos};
  const Polarity labels[3] = {Polarity::kNegative, Polarity::kNeutral,
                              Polarity::kPositive};
  for (std::size_t i = 0; left[0] + left[1] + left[2] > 0; ++i) {
    const std::size_t c = (i * 7) % 3;
    std::size_t pick = c;
    while (left[pick] == 0) pick = (pick + 1) % 3;
    --left[pick];
    char id[16];
    std::snprintf(id, sizeof id, "u%04zu", units.size());
    units.push_back({id, "text " + std::to_string(units.size()), labels[pick]});
  }
  return sentisead::Dataset(name, std::move(units));
}

inline std::filesystem::path corpus_dir() { return SENTISEAD_CORPUS_DIR; }

inline std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("sentisead_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// The bundled synthetic corpus scored by its two complementary cue-family
// detectors, with 10 stratified folds.
struct Synthetic {
  sentisead::Dataset dataset;
  sentisead::FoldAssignment folds;
  sentisead::PredictionMatrix matrix;
  sentisead::FeatureContext context;
};

inline Synthetic synthetic() {
  using namespace sentisead;
  Dataset d = corpus::load_dataset(corpus_dir() / "synthetic.csv", "synthetic");
  FoldAssignment fa = corpus::stratified_folds(d, 10, 45);
  auto lex_a = std::make_shared<const SentimentLexicon>(
      SentimentLexicon::load(corpus_dir() / "family_a_lexicon.tsv", LexiconMode::kDso));
  auto lex_b = std::make_shared<const SentimentLexicon>(SentimentLexicon::load(
      corpus_dir() / "family_b_lexicon.tsv", LexiconMode::kValence));
  DsoDetector a("family-a", lex_a);
  ValenceDetector b("family-b", lex_b);
  PredictionMatrix pm = PredictionMatrix::from_dataset(d, fa.fingerprint());
  for (const Detector* det : {static_cast<const Detector*>(&a), static_cast<const Detector*>(&b)}) {
    std::vector<Polarity> labels;
    for (const Unit& u : d.units()) labels.push_back(det->classify(u));
    pm.add_column(det->name(), std::move(labels), std::string(to_string(det->kind())));
  }
  FeatureContext ctx;
  ctx.resources = TextResources::load_default();
  ctx.partial_base = std::make_shared<const ValenceDetector>(
      "valence", std::make_shared<const SentimentLexicon>(SentimentLexicon::load(
                     TextResources::default_dir() / "valence_lexicon.tsv",
                     LexiconMode::kValence)));
  for (const auto* lex : {lex_a.get(), lex_b.get()}) {
    for (const std::string& w : lex->words()) ctx.sentiment_words.insert(w);
  }
  return {std::move(d), std::move(fa), std::move(pm), std::move(ctx)};
}

}  // namespace fixtures

#endif  // SENTISEAD_TESTS_SUPPORT_FIXTURES_H_

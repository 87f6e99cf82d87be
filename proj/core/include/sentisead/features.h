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


#ifndef SENTISEAD_FEATURES_H_
#define SENTISEAD_FEATURES_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentisead/corpus.h"
#include "sentisead/detectors.h"
#include "sentisead/polarity.h"
#include "sentisead/sparse.h"
#include "sentisead/textprep.h"
#include "sentisead/vocabulary.h"

namespace sentisead {

using FeatureVector = SparseVector;

// Shannon entropies in nats.
struct EntropyTriple {
  double polarity = 0.0;
  double adjective = 0.0;
  double verb = 0.0;
};

struct PartialPolarity {
  Polarity first = Polarity::kNeutral;
  Polarity last = Polarity::kNeutral;

  friend bool operator==(const PartialPolarity&,
                         const PartialPolarity&) = default;
};

// Which feature blocks an ensemble uses. Names follow the variant table:
//   B / N                   labels (+ bag of words for B)
//   B+ / N+                 ... + partial polarity + entropies
//   BNE+ / NNE+             ... + partial polarity, no entropies
//   BNP+ / NNP+             ... + entropies, no partial polarity
struct Variant {
  bool bow = true;
  bool partial = false;
  bool entropy = false;

  static Variant parse(std::string_view name);
  std::string name() const;

  friend bool operator==(const Variant&, const Variant&) = default;
};

// The six "+" variants.
std::vector<Variant> extended_variants();

namespace features {

// -sum p ln p over the relative frequencies; 0 for an empty input.
double shannon_entropy(std::span<const std::size_t> counts);
double shannon_entropy(const std::map<std::string, std::size_t>& counts);

// Frequencies over already-preprocessed and tagged tokens. A NOT_ token
// counts as an occurrence of the word it negates for the polarity entropy.
EntropyTriple entropy_features(const TokenStream& tagged,
                               const WordSet& sentiment_words);
EntropyTriple entropy_features(const Unit& unit,
                               const WordSet& sentiment_words,
                               const TextResources& res);

// Labels the first and the last sentence with a rule-based detector.
// Throws ConfigError when `base` needs training or external data.
PartialPolarity partial_polarity(const Unit& unit, const Detector& base,
                                 const TextResources& res);

}  // namespace features

// Everything text-derived that feature assembly needs and that does not
// depend on the fold split; computed once per unit.
struct UnitAnalysis {
  TokenStream tokens;  // preprocessed and tagged
  PartialPolarity partial;
  EntropyTriple entropy;
};

// Inputs for text-derived features.
struct FeatureContext {
  std::shared_ptr<const TextResources> resources;
  // Rule-based detector labeling first/last sentences.
  std::shared_ptr<const Detector> partial_base;
  WordSet sentiment_words;

  UnitAnalysis analyze(const Unit& unit) const;
};

// Lays out [label one-hots | partial one-hots | entropies | TF-IDF block].
// One-hot slots use kClassOrder. Blocks the variant omits are absent from
// the layout.
class FeatureAssembler {
 public:
  FeatureAssembler(std::vector<std::string> roster, Variant variant,
                   const Vocabulary* vocab);

  std::size_t dim() const;
  std::vector<std::string> column_names() const;
  const Variant& variant() const { return variant_; }
  std::span<const std::string> roster() const { return roster_; }

  // Throws LayoutError when labels.size() differs from the roster size.
  FeatureVector assemble(const UnitAnalysis& analysis,
                         std::span<const Polarity> labels) const;

 private:
  std::vector<std::string> roster_;
  Variant variant_;
  const Vocabulary* vocab_;
};

namespace features {

FeatureVector assemble(const Unit& unit, std::span<const Polarity> labels,
                       std::span<const std::string> roster,
                       const Vocabulary& vocab, const Variant& variant,
                       const FeatureContext& ctx);

// CSV with a header row naming every column, one row per unit.
std::string feature_matrix_csv(const FeatureAssembler& assembler,
                               std::span<const std::string> ids,
                               std::span<const FeatureVector> rows);

}  // namespace features
}  // namespace sentisead

#endif  // SENTISEAD_FEATURES_H_

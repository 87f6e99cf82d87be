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


#include "sentisead/features.h"

#include <cmath>
#include <map>

#include "sentisead/csv.h"
#include "sentisead/error.h"

namespace sentisead {

Variant Variant::parse(std::string_view name) {
  const std::string n = std::string(trim(name));
  Variant v;
  if (n.empty()) throw ConfigError("empty variant name");
  std::string_view rest = n;
  if (rest.front() == 'B') {
    v.bow = true;
  } else if (rest.front() == 'N') {
    v.bow = false;
  } else {
    throw ConfigError("unknown variant '" + n +
                      "' (B, N, B+, BNE+, BNP+, N+, NNE+, NNP+)");
  }
  rest.remove_prefix(1);
  if (rest.empty()) return v;
  if (rest == "+") {
    v.partial = v.entropy = true;
  } else if (rest == "NE+") {
    v.partial = true;
  } else if (rest == "NP+") {
    v.entropy = true;
  } else {
    throw ConfigError("unknown variant '" + n +
                      "' (B, N, B+, BNE+, BNP+, N+, NNE+, NNP+)");
  }
  return v;
}

std::string Variant::name() const {
  std::string n = bow ? "B" : "N";
  if (partial && entropy) return n + "+";
  if (partial) return n + "NE+";
  if (entropy) return n + "NP+";
  return n;
}

std::vector<Variant> extended_variants() {
  std::vector<Variant> out;
  for (const char* n : {"B+", "BNE+", "BNP+", "N+", "NNE+", "NNP+"}) {
    out.push_back(Variant::parse(n));
  }
  return out;
}

namespace features {

double shannon_entropy(std::span<const std::size_t> counts) {
  double total = 0;
  for (std::size_t c : counts) total += static_cast<double>(c);
  if (total == 0) return 0.0;
  double h = 0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log(p);
  }
  return h;
}

double shannon_entropy(const std::map<std::string, std::size_t>& counts) {
  std::vector<std::size_t> v;
  v.reserve(counts.size());
  for (const auto& [item, c] : counts) v.push_back(c);
  return shannon_entropy(v);
}

EntropyTriple entropy_features(const TokenStream& tagged,
                               const WordSet& sentiment_words) {
  std::map<std::string, std::size_t> polar, adjectives, verbs;
  for (const Token& t : tagged) {
    std::string_view word = t.surface;
    if (t.tag == TokenTag::kNegationMarker &&
        word.starts_with(kNegationPrefix)) {
      word.remove_prefix(kNegationPrefix.size());
    }
    if (sentiment_words.contains(std::string(word))) ++polar[std::string(word)];
    if (t.tag == TokenTag::kAdjective) ++adjectives[t.surface];
    if (t.tag == TokenTag::kVerb) ++verbs[t.surface];
  }
  return EntropyTriple{shannon_entropy(polar), shannon_entropy(adjectives),
                       shannon_entropy(verbs)};
}

EntropyTriple entropy_features(const Unit& unit,
                               const WordSet& sentiment_words,
                               const TextResources& res) {
  return entropy_features(textprep::tag_pos(textprep::preprocess(unit.text, res), res),
                          sentiment_words);
}

PartialPolarity partial_polarity(const Unit& unit, const Detector& base,
                                 const TextResources& res) {
  if (!is_rule_based(base.kind())) {
    throw ConfigError("partial polarity needs a rule-based detector, '" +
                      base.name() + "' is " + std::string(to_string(base.kind())));
  }
  const auto spans = textprep::split_sentences(unit.text, res);
  if (spans.empty()) return {};
  auto label = [&](const SentenceSpan& s) {
    return base.classify(
        Unit{unit.id, unit.text.substr(s.start, s.end - s.start), unit.gold});
  };
  PartialPolarity out;
  out.first = label(spans.front());
  out.last = spans.size() == 1 ? out.first : label(spans.back());
  return out;
}

}  // namespace features

UnitAnalysis FeatureContext::analyze(const Unit& unit) const {
  if (!resources) throw ConfigError("feature context has no text resources");
  UnitAnalysis a;
  a.tokens = textprep::tag_pos(textprep::preprocess(unit.text, *resources),
                               *resources);
  if (partial_base) {
    a.partial = features::partial_polarity(unit, *partial_base, *resources);
  }
  a.entropy = features::entropy_features(a.tokens, sentiment_words);
  return a;
}

FeatureAssembler::FeatureAssembler(std::vector<std::string> roster,
                                   Variant variant, const Vocabulary* vocab)
    : roster_(std::move(roster)), variant_(variant), vocab_(vocab) {
  if (variant_.bow && vocab_ == nullptr) {
    throw ConfigError("variant " + variant_.name() + " needs a vocabulary");
  }
}

std::size_t FeatureAssembler::dim() const {
  std::size_t d = kNumClasses * roster_.size();
  if (variant_.partial) d += 2 * kNumClasses;
  if (variant_.entropy) d += 3;
  if (variant_.bow) d += vocab_->size();
  return d;
}

std::vector<std::string> FeatureAssembler::column_names() const {
  std::vector<std::string> names;
  names.reserve(dim());
  for (const std::string& det : roster_) {
    for (Polarity p : kClassOrder) names.push_back(det + "=" + std::string(to_string(p)));
  }
  if (variant_.partial) {
    for (const char* slot : {"first", "last"}) {
      for (Polarity p : kClassOrder) {
        names.push_back(std::string(slot) + "=" + std::string(to_string(p)));
      }
    }
  }
  if (variant_.entropy) {
    names.insert(names.end(), {"entropy_polarity", "entropy_adjective",
                               "entropy_verb"});
  }
  if (variant_.bow) {
    for (const std::string& term : vocab_->terms()) names.push_back("tfidf:" + term);
  }
  return names;
}

FeatureVector FeatureAssembler::assemble(const UnitAnalysis& analysis,
                                         std::span<const Polarity> labels) const {
  if (labels.size() != roster_.size()) {
    throw LayoutError("expected " + std::to_string(roster_.size()) +
                      " detector labels, got " + std::to_string(labels.size()));
  }
  FeatureVector x;
  x.dim = dim();
  std::uint32_t base = 0;
  for (Polarity p : labels) {
    x.push(base + static_cast<std::uint32_t>(class_index(p)), 1.0);
    base += kNumClasses;
  }
  if (variant_.partial) {
    x.push(base + static_cast<std::uint32_t>(class_index(analysis.partial.first)), 1.0);
    base += kNumClasses;
    x.push(base + static_cast<std::uint32_t>(class_index(analysis.partial.last)), 1.0);
    base += kNumClasses;
  }
  if (variant_.entropy) {
    x.push(base, analysis.entropy.polarity);
    x.push(base + 1, analysis.entropy.adjective);
    x.push(base + 2, analysis.entropy.verb);
    base += 3;
  }
  if (variant_.bow) {
    for (const auto& [col, w] : vocab_->tfidf(analysis.tokens)) x.push(base + col, w);
  }
  return x;
}

namespace features {

FeatureVector assemble(const Unit& unit, std::span<const Polarity> labels,
                       std::span<const std::string> roster,
                       const Vocabulary& vocab, const Variant& variant,
                       const FeatureContext& ctx) {
  FeatureAssembler a(std::vector<std::string>(roster.begin(), roster.end()),
                     variant, &vocab);
  return a.assemble(ctx.analyze(unit), labels);
}

std::string feature_matrix_csv(const FeatureAssembler& assembler,
                               std::span<const std::string> ids,
                               std::span<const FeatureVector> rows) {
  if (ids.size() != rows.size()) {
    throw LayoutError("feature matrix: " + std::to_string(ids.size()) +
                      " ids but " + std::to_string(rows.size()) + " rows");
  }
  std::vector<std::string> header = {"id"};
  for (std::string& n : assembler.column_names()) header.push_back(std::move(n));
  std::string out = csv_line(header);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim != assembler.dim()) {
      throw LayoutError("feature matrix row " + ids[r] + " has " +
                        std::to_string(rows[r].dim) + " columns");
    }
    std::vector<std::string> fields = {ids[r]};
    for (double v : rows[r].dense()) fields.push_back(format_double(v));
    out += csv_line(fields);
  }
  return out;
}

}  // namespace features
}  // namespace sentisead

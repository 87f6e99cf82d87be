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


#ifndef SENTISEAD_LEXICON_H_
#define SENTISEAD_LEXICON_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sentisead/polarity.h"

namespace sentisead {

// DSO lexicons hold +1/-1 adjective scores; valence lexicons hold scores
// with magnitude 2..5.
enum class LexiconMode { kDso, kValence };

std::string_view to_string(LexiconMode mode);

class SentimentLexicon {
 public:
  SentimentLexicon() = default;
  // Throws FormatError on a score the mode does not allow.
  SentimentLexicon(LexiconMode mode,
                   std::unordered_map<std::string, int> entries);

  // TSV `word<TAB>score`; words are lower-cased.
  static SentimentLexicon load(const std::filesystem::path& path,
                               LexiconMode mode);
  static SentimentLexicon parse(std::string_view text, LexiconMode mode,
                                std::string_view source = "<memory>");

  LexiconMode mode() const { return mode_; }
  std::size_t size() const { return entries_.size(); }
  std::optional<int> score(std::string_view lower_word) const;
  // Sorted.
  std::vector<std::string> words() const;
  const std::unordered_map<std::string, int>& entries() const {
    return entries_;
  }

 private:
  LexiconMode mode_ = LexiconMode::kDso;
  std::unordered_map<std::string, int> entries_;
};

enum class PatternOrder { kAspectThenCue, kCueThenAspect, kEither };

std::string_view to_string(PatternOrder order);

// Fires when an aspect term and a cue term occur with at most `max_gap`
// tokens between them, in the required order.
struct PatternRule {
  std::string id;
  std::vector<std::string> aspect_terms;
  std::vector<std::string> cue_terms;
  int max_gap = 0;
  PatternOrder order = PatternOrder::kEither;
  Polarity label = Polarity::kPositive;

  // Throws FormatError when the rule is malformed.
  void validate() const;
};

// TSV `id<TAB>aspects<TAB>cues<TAB>max_gap<TAB>order<TAB>label` with
// comma-separated term lists.
std::vector<PatternRule> load_pattern_rules(const std::filesystem::path& path);
std::vector<PatternRule> parse_pattern_rules(
    std::string_view text, std::string_view source = "<memory>");

}  // namespace sentisead

#endif  // SENTISEAD_LEXICON_H_

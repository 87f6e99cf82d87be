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


#ifndef SENTISEAD_TEXTPREP_H_
#define SENTISEAD_TEXTPREP_H_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sentisead {

enum class TokenTag {
  kOther,
  kAdjective,
  kVerb,
  kNegationMarker,
  kEmoticonMarker,
};

std::string_view to_string(TokenTag tag);

struct Token {
  std::string surface;
  TokenTag tag = TokenTag::kOther;

  friend bool operator==(const Token&, const Token&) = default;
};

using TokenStream = std::vector<Token>;
using WordSet = std::unordered_set<std::string>;

// Half-open character range [start, end) into the analyzed text.
struct SentenceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

inline constexpr std::string_view kNegationPrefix = "NOT_";
inline constexpr std::string_view kPositivePlaceholder = "PositiveSentiment";
inline constexpr std::string_view kNegativePlaceholder = "NegativeSentiment";

// Word lists and tables behind the preprocessing pipeline. Loaded from a
// directory holding:
//   stopwords.txt      one token per line
//   emoticons.tsv      emoticon<TAB>placeholder
//   contractions.tsv   contraction<TAB>expansion
//   adjectives.txt     one lemma per line
//   verbs.txt          one lemma per line
//   abbreviations.txt  one abbreviation per line, with its trailing period
// Lines starting with '#' and blank lines are ignored everywhere.
class TextResources {
 public:
  TextResources() = default;

  static TextResources load(const std::filesystem::path& dir);
  // The resource directory shipped with the library (build tree first, then
  // the install prefix). Overridden by SENTISEAD_DATA_DIR when set.
  static std::filesystem::path default_dir();
  static std::shared_ptr<const TextResources> load_default();

  WordSet stopwords;
  // emoticon -> placeholder word
  std::unordered_map<std::string, std::string> emoticons;
  std::unordered_map<std::string, std::string> contractions;
  WordSet adjectives;
  WordSet verbs;
  WordSet abbreviations;
};

namespace textprep {

// Pipeline stages, in the order preprocess() applies them.

// Replaces emoticons standing as their own whitespace-delimited chunk
// (optionally followed by . , ! ?) with a placeholder word. Table entries
// starting with a non-ASCII byte (emoji) are replaced wherever they occur.
std::string replace_emoticons(std::string_view text, const TextResources& res);
// Expands table contractions (case-insensitive) and the generic "<w>n't"
// form to "<w> not". Output words are lower case.
std::string expand_contractions(std::string_view text,
                                const TextResources& res);
// Lower-cased word tokens; punctuation is dropped, a possessive 's is
// stripped. Placeholders and NOT_-prefixed words keep their marker case.
TokenStream tokenize(std::string_view text);
// Merges each negation word with the next token into NOT_<token>.
TokenStream annotate_negation(TokenStream tokens);
TokenStream remove_stopwords(TokenStream tokens, const WordSet& stopwords);

TokenStream preprocess(std::string_view text, const TextResources& res);
TokenStream preprocess(std::string_view text, const TextResources& res,
                       const WordSet& stopwords);

// Rule-based split on runs of . ? ! followed by whitespace or end of text.
// A period ending an allowlisted abbreviation or sitting between digits does
// not end a sentence. Spans are trimmed of surrounding whitespace.
std::vector<SentenceSpan> split_sentences(std::string_view text,
                                          const TextResources& res);

// Tags kOther tokens as adjective or verb: lexicon first, then inflection
// of a verb-lexicon stem (-s/-es/-ed/-ing), then suffix heuristics.
// Marker tags are left untouched.
TokenStream tag_pos(TokenStream tokens, const TextResources& res);
TokenTag classify_word(std::string_view word, const TextResources& res);

// Plain lower-cased word tokens with apostrophes kept ("isn't"). Used by the
// lexicon and pattern detectors, which need negation words intact.
std::vector<std::string> word_tokens(std::string_view text);

// not, no, never, cannot, ... and any word ending in n't.
bool is_negation_word(std::string_view lower_word);

std::string join(const TokenStream& tokens);

}  // namespace textprep
}  // namespace sentisead

#endif  // SENTISEAD_TEXTPREP_H_

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


#include "sentisead/lexicon.h"

#include <algorithm>
#include <cstdlib>

#include "sentisead/csv.h"
#include "sentisead/error.h"

namespace sentisead {
namespace {

bool score_allowed(LexiconMode mode, int score) {
  if (mode == LexiconMode::kDso) return score == 1 || score == -1;
  int mag = std::abs(score);
  return mag >= 2 && mag <= 5;
}

std::string range_text(LexiconMode mode) {
  return mode == LexiconMode::kDso ? "+1 or -1" : "+-2..+-5";
}

bool parse_int(std::string_view s, int& out) {
  std::string t(trim(s));
  if (t.empty()) return false;
  try {
    std::size_t used = 0;
    out = std::stoi(t, &used);
    return used == t.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::string> parse_terms(std::string_view cell) {
  std::vector<std::string> out;
  for (const std::string& raw : split_fields(cell, ',')) {
    std::string t = to_lower(trim(raw));
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

PatternOrder parse_order(std::string_view s, const std::string& where) {
  std::string t = to_lower(trim(s));
  if (t == "aspect-then-cue") return PatternOrder::kAspectThenCue;
  if (t == "cue-then-aspect") return PatternOrder::kCueThenAspect;
  if (t == "either") return PatternOrder::kEither;
  throw FormatError(where + ": unknown order '" + std::string(s) +
                    "' (aspect-then-cue, cue-then-aspect, either)");
}

}  // namespace

std::string_view to_string(LexiconMode mode) {
  return mode == LexiconMode::kDso ? "dso" : "valence";
}

SentimentLexicon::SentimentLexicon(LexiconMode mode,
                                   std::unordered_map<std::string, int> entries)
    : mode_(mode) {
  for (auto& [word, score] : entries) {
    if (!score_allowed(mode, score)) {
      throw FormatError(std::string(to_string(mode)) + " lexicon: score " +
                        std::to_string(score) + " for '" + word +
                        "' outside " + range_text(mode));
    }
    entries_.emplace(to_lower(word), score);
  }
}

SentimentLexicon SentimentLexicon::parse(std::string_view text,
                                         LexiconMode mode,
                                         std::string_view source) {
  std::unordered_map<std::string, int> entries;
  std::size_t line_no = 0;
  for (const std::string& raw : split_fields(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    auto fields = split_fields(line, '\t');
    int score = 0;
    if (fields.size() != 2 || trim(fields[0]).empty() ||
        !parse_int(fields[1], score)) {
      throw FormatError(where + ": expected `word<TAB>score`");
    }
    if (!score_allowed(mode, score)) {
      throw FormatError(where + ": score " + std::to_string(score) +
                        " outside " + range_text(mode) + " for a " +
                        std::string(to_string(mode)) + " lexicon");
    }
    std::string word = to_lower(trim(fields[0]));
    if (!entries.emplace(word, score).second) {
      throw DuplicateError(where + ": duplicate lexicon word '" + word + "'");
    }
  }
  return SentimentLexicon(mode, std::move(entries));
}

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& path,
                                        LexiconMode mode) {
  return parse(read_text_file(path), mode, path.string());
}

std::optional<int> SentimentLexicon::score(std::string_view lower_word) const {
  auto it = entries_.find(std::string(lower_word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> SentimentLexicon::words() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [w, s] : entries_) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(PatternOrder order) {
  switch (order) {
    case PatternOrder::kAspectThenCue: return "aspect-then-cue";
    case PatternOrder::kCueThenAspect: return "cue-then-aspect";
    case PatternOrder::kEither: return "either";
  }
  return "either";
}

void PatternRule::validate() const {
  const std::string who = "pattern rule '" + id + "'";
  if (id.empty()) throw FormatError("pattern rule with empty id");
  if (aspect_terms.empty()) throw FormatError(who + ": no aspect terms");
  if (cue_terms.empty()) throw FormatError(who + ": no cue terms");
  if (max_gap < 0) throw FormatError(who + ": negative max_gap");
  if (label == Polarity::kNeutral) {
    throw FormatError(who + ": label must be positive or negative");
  }
}

std::vector<PatternRule> parse_pattern_rules(std::string_view text,
                                             std::string_view source) {
  std::vector<PatternRule> rules;
  std::size_t line_no = 0;
  for (const std::string& raw : split_fields(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    auto f = split_fields(line, '\t');
    if (f.size() != 6) {
      throw FormatError(where + ": expected 6 tab-separated fields "
                        "(id, aspects, cues, max_gap, order, label), found " +
                        std::to_string(f.size()));
    }
    PatternRule rule;
    rule.id = std::string(trim(f[0]));
    rule.aspect_terms = parse_terms(f[1]);
    rule.cue_terms = parse_terms(f[2]);
    if (!parse_int(f[3], rule.max_gap)) {
      throw FormatError(where + ": max_gap '" + f[3] + "' is not an integer");
    }
    rule.order = parse_order(f[4], where);
    auto label = parse_polarity(f[5]);
    if (!label) throw LabelError(where + ": unknown label '" + f[5] + "'");
    rule.label = *label;
    try {
      rule.validate();
    } catch (const FormatError& e) {
      throw FormatError(where + ": " + e.what());
    }
    for (const PatternRule& r : rules) {
      if (r.id == rule.id) {
        throw DuplicateError(where + ": duplicate rule id '" + rule.id + "'");
      }
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::vector<PatternRule> load_pattern_rules(const std::filesystem::path& path) {
  return parse_pattern_rules(read_text_file(path), path.string());
}

}  // namespace sentisead

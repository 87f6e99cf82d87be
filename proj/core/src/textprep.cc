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


#include "sentisead/textprep.h"

#include <array>
#include <cctype>
#include <cstdlib>
#include <system_error>

#include "sentisead/csv.h"
#include "sentisead/error.h"

#ifndef SENTISEAD_BUILD_DATA_DIR
#define SENTISEAD_BUILD_DATA_DIR ""
#endif
#ifndef SENTISEAD_INSTALL_DATA_DIR
#define SENTISEAD_INSTALL_DATA_DIR ""
#endif

namespace sentisead {
namespace {

bool is_ascii_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}
bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}
bool is_non_ascii(char c) { return static_cast<unsigned char>(c) >= 0x80; }

bool starts_with(std::string_view s, std::string_view p) {
  return s.size() >= p.size() && s.substr(0, p.size()) == p;
}
bool ends_with(std::string_view s, std::string_view p) {
  return s.size() >= p.size() && s.substr(s.size() - p.size()) == p;
}

// Replaces the right single quotation mark (U+2019) by an apostrophe.
std::string normalize_quotes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && text.substr(i, 3) == "\xE2\x80\x99") {
      out.push_back('\'');
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::string text = read_text_file(path);
  std::vector<std::string> lines;
  for (const std::string& raw : split_fields(text, '\n')) {
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    lines.emplace_back(line);
  }
  return lines;
}

WordSet read_word_set(const std::filesystem::path& path) {
  WordSet out;
  for (const std::string& line : read_lines(path)) {
    out.insert(to_lower(trim(line)));
  }
  return out;
}

std::unordered_map<std::string, std::string> read_table(
    const std::filesystem::path& path, bool lower_keys) {
  std::unordered_map<std::string, std::string> out;
  std::size_t n = 0;
  for (const std::string& line : read_lines(path)) {
    ++n;
    auto fields = split_fields(line, '\t');
    if (fields.size() != 2 || trim(fields[0]).empty()) {
      throw FormatError(path.string() + ": entry " + std::to_string(n) +
                        " is not `key<TAB>value`: '" + line + "'");
    }
    std::string key(trim(fields[0]));
    if (lower_keys) key = to_lower(key);
    out[key] = std::string(trim(fields[1]));
  }
  return out;
}

bool is_placeholder(std::string_view s) {
  return s == kPositivePlaceholder || s == kNegativePlaceholder;
}

// Candidate lemmas of an inflected verb form.
std::vector<std::string> verb_stems(std::string_view w) {
  std::vector<std::string> stems;
  auto add = [&](std::string_view s) {
    if (s.size() >= 2) stems.emplace_back(s);
  };
  if (ends_with(w, "ies")) {
    add(std::string(w.substr(0, w.size() - 3)) + "y");
  }
  if (ends_with(w, "es")) add(w.substr(0, w.size() - 2));
  if (ends_with(w, "s") && !ends_with(w, "ss")) add(w.substr(0, w.size() - 1));
  if (ends_with(w, "ied")) {
    add(std::string(w.substr(0, w.size() - 3)) + "y");
  }
  if (ends_with(w, "ed")) {
    std::string_view base = w.substr(0, w.size() - 2);
    add(base);
    add(w.substr(0, w.size() - 1));  // freeze-d
    if (base.size() >= 2 && base[base.size() - 1] == base[base.size() - 2]) {
      add(base.substr(0, base.size() - 1));  // stopp-ed
    }
  }
  if (ends_with(w, "ing")) {
    std::string_view base = w.substr(0, w.size() - 3);
    add(base);
    add(std::string(base) + "e");
    if (base.size() >= 2 && base[base.size() - 1] == base[base.size() - 2]) {
      add(base.substr(0, base.size() - 1));
    }
  }
  return stems;
}

constexpr std::size_t kMinSuffixWordLength = 6;

}  // namespace

std::string_view to_string(TokenTag tag) {
  switch (tag) {
    case TokenTag::kOther: return "other";
    case TokenTag::kAdjective: return "adjective";
    case TokenTag::kVerb: return "verb";
    case TokenTag::kNegationMarker: return "negation-marker";
    case TokenTag::kEmoticonMarker: return "emoticon-marker";
  }
  return "other";
}

TextResources TextResources::load(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw IoError("text resource directory '" + dir.string() +
                  "' does not exist");
  }
  TextResources r;
  r.stopwords = read_word_set(dir / "stopwords.txt");
  r.emoticons = read_table(dir / "emoticons.tsv", false);
  for (const auto& [emo, placeholder] : r.emoticons) {
    if (!is_placeholder(placeholder)) {
      throw FormatError((dir / "emoticons.tsv").string() + ": emoticon '" +
                        emo + "' maps to unknown placeholder '" + placeholder +
                        "'");
    }
  }
  r.contractions = read_table(dir / "contractions.tsv", true);
  for (auto& [k, v] : r.contractions) v = to_lower(v);
  r.adjectives = read_word_set(dir / "adjectives.txt");
  r.verbs = read_word_set(dir / "verbs.txt");
  r.abbreviations = read_word_set(dir / "abbreviations.txt");
  return r;
}

std::filesystem::path TextResources::default_dir() {
  namespace fs = std::filesystem;
  if (const char* env = std::getenv("SENTISEAD_DATA_DIR"); env && *env) {
    return fs::path(env);
  }
  fs::path build = fs::path(SENTISEAD_BUILD_DATA_DIR) / "resources";
  std::error_code ec;
  if (fs::is_directory(build, ec)) return build;
  return fs::path(SENTISEAD_INSTALL_DATA_DIR) / "resources";
}

std::shared_ptr<const TextResources> TextResources::load_default() {
  return std::make_shared<const TextResources>(load(default_dir()));
}

namespace textprep {

std::string replace_emoticons(std::string_view text,
                              const TextResources& res) {
  std::string work(text);

  // Emoji entries first: they need no surrounding whitespace.
  for (const auto& [emo, placeholder] : res.emoticons) {
    if (emo.empty() || !is_non_ascii(emo.front())) continue;
    std::string replaced;
    std::size_t pos = 0;
    while (true) {
      std::size_t hit = work.find(emo, pos);
      if (hit == std::string::npos) break;
      replaced.append(work, pos, hit - pos);
      replaced += " " + placeholder + " ";
      pos = hit + emo.size();
    }
    if (pos > 0) {
      replaced.append(work, pos, std::string::npos);
      work = std::move(replaced);
    }
  }

  std::string out;
  out.reserve(work.size());
  std::size_t i = 0;
  while (i < work.size()) {
    if (is_space(work[i])) {
      out.push_back(work[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < work.size() && !is_space(work[j])) ++j;
    std::string_view chunk(work.data() + i, j - i);

    auto it = res.emoticons.find(std::string(chunk));
    std::string_view trailing;
    if (it == res.emoticons.end()) {
      std::size_t core = chunk.size();
      while (core > 0 && std::string_view(".,!?").find(chunk[core - 1]) !=
                             std::string_view::npos) {
        --core;
      }
      if (core > 0 && core < chunk.size()) {
        it = res.emoticons.find(std::string(chunk.substr(0, core)));
        trailing = chunk.substr(core);
      }
    }
    if (it != res.emoticons.end()) {
      out += it->second;
      out += trailing;
    } else {
      out += chunk;
    }
    i = j;
  }
  return out;
}

std::string expand_contractions(std::string_view text,
                                const TextResources& res) {
  const std::string norm = normalize_quotes(text);
  std::string out;
  out.reserve(norm.size() + 16);
  std::size_t i = 0;
  while (i < norm.size()) {
    char c = norm[i];
    if (!(is_ascii_alnum(c) || c == '\'')) {
      out.push_back(c);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < norm.size() && (is_ascii_alnum(norm[j]) || norm[j] == '\'')) {
      ++j;
    }
    std::string_view word(norm.data() + i, j - i);
    std::string lower = to_lower(word);
    if (auto it = res.contractions.find(lower); it != res.contractions.end()) {
      out += it->second;
    } else if (lower.size() > 3 && ends_with(lower, "n't")) {
      out += lower.substr(0, lower.size() - 3);
      out += " not";
    } else {
      out += word;
    }
    i = j;
  }
  return out;
}

TokenStream tokenize(std::string_view text) {
  TokenStream tokens;
  const std::string norm = normalize_quotes(text);
  std::size_t i = 0;
  auto is_word_char = [](char c) {
    return is_ascii_alnum(c) || c == '_' || c == '\'' || is_non_ascii(c);
  };
  while (i < norm.size()) {
    if (!is_word_char(norm[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < norm.size() && is_word_char(norm[j])) ++j;
    std::string_view raw(norm.data() + i, j - i);
    i = j;

    while (!raw.empty() && raw.front() == '\'') raw.remove_prefix(1);
    while (!raw.empty() && raw.back() == '\'') raw.remove_suffix(1);
    if (raw.size() > 2 && (ends_with(raw, "'s") || ends_with(raw, "'S"))) {
      raw.remove_suffix(2);
    }
    bool has_content = false;
    for (char c : raw) {
      if (is_ascii_alnum(c) || is_non_ascii(c)) has_content = true;
    }
    if (!has_content) continue;

    if (is_placeholder(raw)) {
      tokens.push_back({std::string(raw), TokenTag::kEmoticonMarker});
    } else if (starts_with(raw, kNegationPrefix) &&
               raw.size() > kNegationPrefix.size()) {
      tokens.push_back(
          {std::string(kNegationPrefix) +
               to_lower(raw.substr(kNegationPrefix.size())),
           TokenTag::kNegationMarker});
    } else {
      tokens.push_back({to_lower(raw), TokenTag::kOther});
    }
  }
  return tokens;
}

bool is_negation_word(std::string_view w) {
  static constexpr std::array<std::string_view, 10> kWords = {
      "not", "no", "never", "cannot", "none",
      "nobody", "nothing", "neither", "nor", "nowhere"};
  for (std::string_view n : kWords) {
    if (w == n) return true;
  }
  return w.size() > 3 && ends_with(w, "n't");
}

TokenStream annotate_negation(TokenStream tokens) {
  TokenStream out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token& t = tokens[i];
    if (t.tag == TokenTag::kOther && is_negation_word(t.surface)) {
      if (i + 1 < tokens.size() && tokens[i + 1].tag == TokenTag::kOther) {
        out.push_back({std::string(kNegationPrefix) + tokens[i + 1].surface,
                       TokenTag::kNegationMarker});
        ++i;
        continue;
      }
      t.tag = TokenTag::kNegationMarker;
    }
    out.push_back(std::move(t));
  }
  return out;
}

TokenStream remove_stopwords(TokenStream tokens, const WordSet& stopwords) {
  std::erase_if(tokens, [&](const Token& t) {
    return stopwords.contains(t.surface);
  });
  return tokens;
}

TokenStream preprocess(std::string_view text, const TextResources& res) {
  return preprocess(text, res, res.stopwords);
}

TokenStream preprocess(std::string_view text, const TextResources& res,
                       const WordSet& stopwords) {
  std::string s = replace_emoticons(text, res);
  s = expand_contractions(s, res);
  return remove_stopwords(annotate_negation(tokenize(s)), stopwords);
}

std::vector<SentenceSpan> split_sentences(std::string_view text,
                                          const TextResources& res) {
  std::vector<SentenceSpan> spans;
  const std::size_t n = text.size();
  std::size_t start = 0;
  auto emit = [&](std::size_t from, std::size_t to) {
    while (from < to && is_space(text[from])) ++from;
    while (to > from && is_space(text[to - 1])) --to;
    if (from < to) spans.push_back({from, to});
  };
  auto is_terminator = [](char c) { return c == '.' || c == '?' || c == '!'; };

  std::size_t i = 0;
  while (i < n) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t run_start = i;
    std::size_t j = i;
    while (j < n && is_terminator(text[j])) ++j;
    while (j < n && std::string_view(")\"'").find(text[j]) !=
                        std::string_view::npos) {
      ++j;
    }
    bool boundary = j == n || is_space(text[j]);
    if (boundary && j - run_start == 1 && text[run_start] == '.') {
      // Abbreviation guard: the chunk ending at this period.
      std::size_t w = run_start;
      while (w > start && !is_space(text[w - 1])) --w;
      std::string chunk = to_lower(text.substr(w, run_start + 1 - w));
      while (!chunk.empty() && std::string_view("(\"'").find(chunk.front()) !=
                                   std::string_view::npos) {
        chunk.erase(chunk.begin());
      }
      if (res.abbreviations.contains(chunk)) boundary = false;
    }
    if (boundary && text[run_start] == '.' && run_start > 0 &&
        run_start + 1 < n &&
        std::isdigit(static_cast<unsigned char>(text[run_start - 1])) &&
        std::isdigit(static_cast<unsigned char>(text[run_start + 1]))) {
      boundary = false;
    }
    if (boundary) {
      emit(start, j);
      start = j;
    }
    i = j;
  }
  emit(start, n);
  return spans;
}

TokenTag classify_word(std::string_view word, const TextResources& res) {
  std::string w(word);
  if (res.adjectives.contains(w)) return TokenTag::kAdjective;
  if (res.verbs.contains(w)) return TokenTag::kVerb;
  for (const std::string& stem : verb_stems(w)) {
    if (res.verbs.contains(stem)) return TokenTag::kVerb;
  }
  if (w.size() >= kMinSuffixWordLength) {
    if (ends_with(w, "ize") || ends_with(w, "ise")) return TokenTag::kVerb;
    for (std::string_view suffix : {"ful", "ive", "able", "ous"}) {
      if (ends_with(w, suffix)) return TokenTag::kAdjective;
    }
  }
  return TokenTag::kOther;
}

TokenStream tag_pos(TokenStream tokens, const TextResources& res) {
  for (Token& t : tokens) {
    if (t.tag == TokenTag::kNegationMarker ||
        t.tag == TokenTag::kEmoticonMarker) {
      continue;
    }
    t.tag = classify_word(t.surface, res);
  }
  return tokens;
}

std::vector<std::string> word_tokens(std::string_view text) {
  std::vector<std::string> out;
  const std::string norm = normalize_quotes(text);
  std::size_t i = 0;
  auto is_word_char = [](char c) {
    return is_ascii_alnum(c) || c == '_' || c == '\'' || is_non_ascii(c);
  };
  while (i < norm.size()) {
    if (!is_word_char(norm[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < norm.size() && is_word_char(norm[j])) ++j;
    std::string_view raw(norm.data() + i, j - i);
    i = j;
    while (!raw.empty() && raw.front() == '\'') raw.remove_prefix(1);
    while (!raw.empty() && raw.back() == '\'') raw.remove_suffix(1);
    if (!raw.empty()) out.push_back(to_lower(raw));
  }
  return out;
}

std::string join(const TokenStream& tokens) {
  std::string out;
  for (const Token& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t.surface;
  }
  return out;
}

}  // namespace textprep
}  // namespace sentisead

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


// Writes the bundled synthetic corpus: two disjoint cue families, one read
// by a dso-mode lexicon and one by a valence-mode lexicon, plus neutral
// chatter, a simulated external tool, and a small error-tag file.

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sentisead/csv.h"
#include "sentisead/polarity.h"
#include "sentisead/rng.h"

namespace {

using sentisead::Polarity;
using sentisead::Rng;

constexpr std::array<const char*, 8> kFamilyAPositive = {
    "elegant", "intuitive", "robust", "snappy",
    "polished", "seamless", "tidy", "sturdy"};
constexpr std::array<const char*, 8> kFamilyANegative = {
    "clunky", "fragile", "bloated", "sluggish",
    "brittle", "convoluted", "janky", "kludgy"};
constexpr std::array<const char*, 8> kFamilyBPositive = {
    "superb", "delightful", "stellar", "flawless",
    "splendid", "marvelous", "terrific", "lifesaving"};
constexpr std::array<const char*, 8> kFamilyBNegative = {
    "abysmal", "dreadful", "atrocious", "horrendous",
    "infuriating", "pathetic", "appalling", "dismal"};
constexpr std::array<int, 8> kFamilyBPositiveScore = {4, 3, 4, 5, 3, 3, 4, 3};
constexpr std::array<int, 8> kFamilyBNegativeScore = {-5, -4, -5, -4,
                                                      -3, -4, -4, -3};

constexpr std::array<const char*, 14> kAspects = {
    "API",          "build system",  "installer",   "debugger",
    "query builder", "test runner",  "plugin",      "CLI",
    "config parser", "package manager", "profiler", "editor integration",
    "migration tool", "logging module"};
constexpr std::array<const char*, 5> kPlatforms = {"Linux", "macOS", "Windows",
                                                   "Docker", "WSL"};
constexpr std::array<const char*, 5> kFiles = {
    "settings.json", "pom.xml", "build.gradle", ".env", "setup.cfg"};

constexpr std::array<const char*, 7> kOpinionTemplates = {
    "The {a} is {c}.",
    "Honestly the new {a} feels {c} after the upgrade.",
    "I found the {a} pretty {c} when I tried it yesterday.",
    "The {a} in version {v} is {c}.",
    "Switched to the {a} last week and it is {c}.",
    "Our team thinks the {a} is {c} overall.",
    "Tried the {a} on {p}. It is {c}.",
};
constexpr std::array<const char*, 3> kNegatedTemplates = {
    "The {a} is not {c}.",
    "I would not call the {a} {c}.",
    "Sadly the {a} on {p} is not {c} at all.",
};
constexpr std::array<const char*, 10> kNeutralTemplates = {
    "How do I configure the {a} on {p}?",
    "I pushed the change for the {a} to the release branch.",
    "The {a} reads its settings from {f}.",
    "Can someone review the pull request for the {a}?",
    "Version {v} moved the {a} into a separate module.",
    "See the attached log for the {a} output on {p}.",
    "Is there a flag to run the {a} without {f}?",
    "The {a} was renamed in version {v}.",
    "I opened an issue about the {a}. Details are in the ticket.",
    "Does the {a} support {p} yet?",
};

template <std::size_t N>
const char* pick(const std::array<const char*, N>& items, Rng& rng) {
  return items[rng.below(N)];
}

std::string fill(std::string tpl, const std::string& aspect,
                 const std::string& cue, Rng& rng) {
  auto replace = [&](const std::string& key, const std::string& value) {
    for (std::size_t p = tpl.find(key); p != std::string::npos;
         p = tpl.find(key, p + value.size())) {
      tpl.replace(p, key.size(), value);
    }
  };
  const std::string version = std::to_string(1 + rng.below(4)) + "." +
                              std::to_string(rng.below(10));
  replace("{a}", aspect);
  replace("{c}", cue);
  replace("{v}", version);
  replace("{p}", pick(kPlatforms, rng));
  replace("{f}", pick(kFiles, rng));
  return tpl;
}

struct Item {
  std::string text;
  Polarity gold;
  std::string tag;  // error category hint, empty for most units
};

Polarity flip(Polarity p) {
  return p == Polarity::kPositive ? Polarity::kNegative : Polarity::kPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate the bundled synthetic corpus"};
  std::string out = "data/corpus";
  std::uint64_t seed = sentisead::kDefaultSeed;
  int per_family_class = 100;
  int neutral = 200;
  double noise = 0.03;
  app.add_option("--out", out, "Output directory");
  app.add_option("--seed", seed, "Seed");
  app.add_option("--per-family-class", per_family_class,
                 "Units per (family, polarity) cell");
  app.add_option("--neutral", neutral, "Neutral units");
  app.add_option("--noise", noise, "Label-noise rate");
  CLI11_PARSE(app, argc, argv);

  Rng rng(sentisead::derive_seed(seed, "synthetic-corpus"));
  std::vector<Item> items;

  auto opinion = [&](const auto& pos, const auto& neg) {
    for (Polarity label : {Polarity::kPositive, Polarity::kNegative}) {
      for (int i = 0; i < per_family_class; ++i) {
        const bool negated = rng.unit() < 0.06;
        // A negated cue carries the opposite polarity word.
        const Polarity cue_side = negated ? flip(label) : label;
        const char* cue = cue_side == Polarity::kPositive ? pick(pos, rng)
                                                          : pick(neg, rng);
        const std::string text =
            negated ? fill(pick(kNegatedTemplates, rng), pick(kAspects, rng), cue, rng)
                    : fill(pick(kOpinionTemplates, rng), pick(kAspects, rng), cue, rng);
        items.push_back({text, label, negated ? "Context" : ""});
      }
    }
  };
  opinion(kFamilyAPositive, kFamilyANegative);
  opinion(kFamilyBPositive, kFamilyBNegative);
  for (int i = 0; i < neutral; ++i) {
    items.push_back({fill(pick(kNeutralTemplates, rng), pick(kAspects, rng), "", rng),
                     Polarity::kNeutral, ""});
  }

  for (Item& it : items) {
    if (rng.unit() >= noise) continue;
    const auto shift = 1 + rng.below(2);
    it.gold = sentisead::class_at((sentisead::class_index(it.gold) + shift) %
                                  sentisead::kNumClasses);
    it.tag = "General";
  }
  rng.shuffle(std::span<Item>(items));

  namespace fs = std::filesystem;
  fs::create_directories(out);
  std::string corpus = "id,text,label\n";
  std::string external = "id,label\n";
  std::string tags = "id,category\n";
  Rng ext_rng(sentisead::derive_seed(seed, "external-tool"));
  for (std::size_t i = 0; i < items.size(); ++i) {
    char id[16];
    std::snprintf(id, sizeof id, "syn-%04zu", i + 1);
    corpus += sentisead::csv_line(
        {id, items[i].text, std::string(sentisead::to_string(items[i].gold))});
    Polarity ext = items[i].gold;
    if (ext_rng.unit() >= 0.72) {
      ext = sentisead::class_at((sentisead::class_index(ext) + 1 + ext_rng.below(2)) %
                                sentisead::kNumClasses);
    }
    external += sentisead::csv_line({id, std::string(sentisead::to_string(ext))});
    if (!items[i].tag.empty()) tags += sentisead::csv_line({id, items[i].tag});
  }

  std::string lex_a = "# family A cue words, dso mode\n";
  for (const char* w : kFamilyAPositive) lex_a += std::string(w) + "\t1\n";
  for (const char* w : kFamilyANegative) lex_a += std::string(w) + "\t-1\n";
  std::string lex_b = "# family B cue words, valence mode\n";
  for (std::size_t i = 0; i < kFamilyBPositive.size(); ++i) {
    lex_b += std::string(kFamilyBPositive[i]) + "\t" +
             std::to_string(kFamilyBPositiveScore[i]) + "\n";
  }
  for (std::size_t i = 0; i < kFamilyBNegative.size(); ++i) {
    lex_b += std::string(kFamilyBNegative[i]) + "\t" +
             std::to_string(kFamilyBNegativeScore[i]) + "\n";
  }

  const fs::path dir(out);
  sentisead::write_file_atomic(dir / "synthetic.csv", corpus);
  sentisead::write_file_atomic(dir / "external_tool.csv", external);
  sentisead::write_file_atomic(dir / "error_tags.csv", tags);
  sentisead::write_file_atomic(dir / "family_a_lexicon.tsv", lex_a);
  sentisead::write_file_atomic(dir / "family_b_lexicon.tsv", lex_b);
  std::printf("wrote %zu units to %s\n", items.size(), out.c_str());
  return 0;
}

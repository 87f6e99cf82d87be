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


#include "run_config.h"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "sentisead/csv.h"
#include "sentisead/error.h"

namespace sentisead::cli {

using nlohmann::json;
namespace fs = std::filesystem;

fs::path bundled(std::string_view file) {
  return TextResources::default_dir() / fs::path(file);
}

namespace {

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  if (path.empty() || path.is_absolute()) return path;
  return base / path;
}

void reject_unknown(const json& j, std::initializer_list<const char*> known,
                    const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(known.begin(), known.end(),
                     [&](const char* k) { return key == k; })) {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
}

DetectorEntry parse_entry(const json& j, const fs::path& base,
                          const std::string& where) {
  reject_unknown(j,
                 {"name", "kind", "lexicon", "rules", "predictions",
                  "negation_window", "learner", "oversample"},
                 where);
  DetectorEntry e;
  e.kind = parse_detector_kind(j.at("kind").get<std::string>());
  e.name = j.value("name", std::string(to_string(e.kind)));
  if (j.contains("lexicon")) e.lexicon = resolve(base, j.at("lexicon"));
  if (j.contains("rules")) e.rules = resolve(base, j.at("rules"));
  if (j.contains("predictions")) e.predictions = resolve(base, j.at("predictions"));
  e.negation_window = j.value("negation_window", e.negation_window);
  if (j.contains("learner")) {
    e.learner = json_learner(j.at("learner"));
    e.learner_seed_set = j.at("learner").contains("seed");
  }
  if (j.contains("oversample")) {
    e.oversample = learner::parse_oversample(j.at("oversample").get<std::string>());
  }
  if (e.kind == DetectorKind::kDso && e.lexicon.empty()) {
    e.lexicon = bundled("dso_lexicon.tsv");
  }
  if (e.kind == DetectorKind::kValence && e.lexicon.empty()) {
    e.lexicon = bundled("valence_lexicon.tsv");
  }
  if (e.kind == DetectorKind::kPattern && e.rules.empty()) {
    e.rules = bundled("pattern_rules.tsv");
  }
  if (e.kind == DetectorKind::kExternal && e.predictions.empty()) {
    throw ConfigError(where + ": external detector '" + e.name +
                      "' needs a predictions file");
  }
  return e;
}

void require_file(const fs::path& p, const std::string& what) {
  std::error_code ec;
  if (!fs::is_regular_file(p, ec)) {
    throw ConfigError(what + ": file '" + p.string() + "' does not exist");
  }
}

}  // namespace

learner::LearnerConfig json_learner(const json& j) {
  learner::LearnerConfig cfg;
  reject_unknown(j,
                 {"algorithm", "n_trees", "max_depth", "min_leaf",
                  "max_features", "learning_rate", "seed", "threads"},
                 "learner");
  if (j.contains("algorithm")) {
    cfg.algorithm = learner::parse_algorithm(j.at("algorithm").get<std::string>());
  }
  cfg.n_trees = j.value("n_trees", cfg.n_trees);
  if (j.contains("max_depth")) {
    const json& d = j.at("max_depth");
    if (d.is_null() || (d.is_string() && d.get<std::string>() == "none")) {
      cfg.max_depth.reset();
    } else {
      cfg.max_depth = d.get<int>();
    }
  }
  cfg.min_leaf = j.value("min_leaf", cfg.min_leaf);
  if (j.contains("max_features")) {
    cfg.max_features =
        learner::parse_max_features(j.at("max_features").get<std::string>());
  }
  cfg.learning_rate = j.value("learning_rate", cfg.learning_rate);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.threads = j.value("threads", cfg.threads);
  cfg.validate();
  return cfg;
}

RunConfig::RunConfig() {
  partial_base.name = "partial-base";
  partial_base.kind = DetectorKind::kValence;
}

RunConfig RunConfig::load(const fs::path& path) {
  RunConfig cfg = parse(read_text_file(path), path.parent_path(), path.string());
  cfg.source = path;
  return cfg;
}

RunConfig RunConfig::parse(std::string_view json_text, const fs::path& base,
                           std::string_view source) {
  const std::string where(source);
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
  RunConfig cfg;
  try {
    reject_unknown(j,
                   {"dataset", "name", "folds", "roster", "ensemble", "vote",
                    "seed", "out"},
                   where);
    if (j.contains("dataset")) cfg.dataset = resolve(base, j.at("dataset"));
    cfg.dataset_name = j.value("name", std::string());
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("folds")) {
      const json& f = j.at("folds");
      reject_unknown(f, {"k", "seed"}, where + ": folds");
      cfg.k = f.value("k", cfg.k);
      if (f.contains("seed")) cfg.fold_seed = f.at("seed").get<std::uint64_t>();
    }
    if (j.contains("roster")) {
      std::set<std::string> names;
      for (const json& entry : j.at("roster")) {
        DetectorEntry e = parse_entry(entry, base, where + ": roster");
        if (!names.insert(e.name).second) {
          throw ConfigError(where + ": detector name '" + e.name +
                            "' used twice");
        }
        cfg.roster.push_back(std::move(e));
      }
    }
    if (j.contains("ensemble")) {
      const json& en = j.at("ensemble");
      reject_unknown(en,
                     {"roster", "variant", "learner", "oversample",
                      "partial_base", "sentiment_lexicons"},
                     where + ": ensemble");
      if (en.contains("roster")) en.at("roster").get_to(cfg.ensemble_roster);
      if (en.contains("variant")) {
        cfg.variant = Variant::parse(en.at("variant").get<std::string>());
      }
      if (en.contains("learner")) {
        cfg.ensemble_learner = json_learner(en.at("learner"));
        cfg.ensemble_seed_set = en.at("learner").contains("seed");
      }
      if (en.contains("oversample")) {
        cfg.ensemble_oversample =
            learner::parse_oversample(en.at("oversample").get<std::string>());
      }
      if (en.contains("partial_base")) {
        cfg.partial_base =
            parse_entry(en.at("partial_base"), base, where + ": partial_base");
      }
      if (en.contains("sentiment_lexicons")) {
        for (const json& p : en.at("sentiment_lexicons")) {
          cfg.sentiment_lexicons.push_back(resolve(base, p.get<std::string>()));
        }
      }
    }
    if (cfg.partial_base.lexicon.empty() && cfg.partial_base.rules.empty()) {
      cfg.partial_base.lexicon = bundled("valence_lexicon.tsv");
    }
    if (j.contains("vote")) {
      const json& v = j.at("vote");
      reject_unknown(v, {"tie_rule"}, where + ": vote");
      if (v.contains("tie_rule")) {
        cfg.tie_rule = parse_tie_rule(v.at("tie_rule").get<std::string>());
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
  if (cfg.k < 2) throw ConfigError(where + ": folds.k must be >= 2");
  return cfg;
}

void RunConfig::validate() const {
  if (dataset.empty()) throw ConfigError("no dataset configured");
  require_file(dataset, "dataset");
  for (const DetectorEntry& e : roster) {
    const std::string what = "detector '" + e.name + "'";
    switch (e.kind) {
      case DetectorKind::kDso:
      case DetectorKind::kValence: require_file(e.lexicon, what); break;
      case DetectorKind::kPattern: require_file(e.rules, what); break;
      case DetectorKind::kExternal: require_file(e.predictions, what); break;
      case DetectorKind::kBow: break;
    }
  }
  if (!is_rule_based(partial_base.kind)) {
    throw ConfigError("partial_base must be a dso, valence or pattern detector");
  }
  if (partial_base.kind == DetectorKind::kPattern) {
    require_file(partial_base.rules, "partial_base");
  } else {
    require_file(partial_base.lexicon, "partial_base");
  }
  for (const fs::path& p : sentiment_lexicons) require_file(p, "sentiment lexicon");
  for (const std::string& name : ensemble_roster) {
    if (!find(name)) {
      throw ConfigError("ensemble roster names unknown detector '" + name + "'");
    }
  }
}

std::string RunConfig::name() const {
  if (!dataset_name.empty()) return dataset_name;
  return dataset.stem().string();
}

std::uint64_t RunConfig::folds_seed() const {
  return fold_seed ? *fold_seed : seed;
}

learner::LearnerConfig RunConfig::detector_learner(const DetectorEntry& e) const {
  learner::LearnerConfig cfg = e.learner;
  if (!e.learner_seed_set) cfg.seed = derive_seed(seed, "detector:" + e.name);
  return cfg;
}

learner::LearnerConfig RunConfig::stacker_learner() const {
  learner::LearnerConfig cfg = ensemble_learner;
  if (!ensemble_seed_set) cfg.seed = derive_seed(seed, "ensemble");
  return cfg;
}

std::vector<std::string> RunConfig::stacker_roster() const {
  if (!ensemble_roster.empty()) return ensemble_roster;
  std::vector<std::string> names;
  for (const DetectorEntry& e : roster) names.push_back(e.name);
  return names;
}

EnsembleSpec RunConfig::ensemble_spec() const {
  EnsembleSpec spec;
  spec.roster = stacker_roster();
  spec.variant = variant;
  spec.learner = stacker_learner();
  spec.oversample = ensemble_oversample;
  return spec;
}

const DetectorEntry* RunConfig::find(std::string_view name) const {
  for (const DetectorEntry& e : roster) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::shared_ptr<const Detector> make_detector(const DetectorEntry& e) {
  switch (e.kind) {
    case DetectorKind::kDso:
      return std::make_shared<DsoDetector>(
          e.name,
          std::make_shared<SentimentLexicon>(
              SentimentLexicon::load(e.lexicon, LexiconMode::kDso)),
          e.negation_window);
    case DetectorKind::kValence:
      return std::make_shared<ValenceDetector>(
          e.name, std::make_shared<SentimentLexicon>(
                      SentimentLexicon::load(e.lexicon, LexiconMode::kValence)));
    case DetectorKind::kPattern:
      return std::make_shared<PatternDetector>(e.name,
                                               load_pattern_rules(e.rules));
    case DetectorKind::kExternal:
      return detectors::external_load(e.predictions, e.name);
    case DetectorKind::kBow:
      break;
  }
  throw ConfigError("detector '" + e.name + "' needs training");
}

namespace {

WordSet lexicon_words(const fs::path& path) {
  SentimentLexicon lex;
  try {
    lex = SentimentLexicon::load(path, LexiconMode::kDso);
  } catch (const FormatError&) {
    lex = SentimentLexicon::load(path, LexiconMode::kValence);
  }
  const auto words = lex.words();
  return WordSet(words.begin(), words.end());
}

}  // namespace

FeatureContext make_feature_context(const RunConfig& cfg) {
  FeatureContext ctx;
  ctx.resources = TextResources::load_default();
  ctx.partial_base = make_detector(cfg.partial_base);
  std::vector<fs::path> sources = cfg.sentiment_lexicons;
  if (sources.empty()) {
    for (const DetectorEntry& e : cfg.roster) {
      if (e.kind == DetectorKind::kDso || e.kind == DetectorKind::kValence) {
        sources.push_back(e.lexicon);
      }
    }
  }
  if (sources.empty()) {
    sources = {bundled("dso_lexicon.tsv"), bundled("valence_lexicon.tsv")};
  }
  for (const fs::path& p : sources) ctx.sentiment_words.merge(lexicon_words(p));
  return ctx;
}

}  // namespace sentisead::cli

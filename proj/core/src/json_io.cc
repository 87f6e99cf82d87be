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


#include "json_io.h"

#include <algorithm>
#include <string>
#include <vector>

#include "sentisead/ensemble.h"
#include "sentisead/error.h"

namespace sentisead {
namespace learner {

using json_io::json;

class ModelAccess {
 public:
  static json to_json(const TrainedModel& m) {
    json trees = json::array();
    for (const Tree& t : m.trees_) {
      json values = json::array();
      for (const auto& v : t.value) values.push_back(v);
      trees.push_back({{"feature", t.feature},
                       {"threshold", t.threshold},
                       {"left", t.left},
                       {"right", t.right},
                       {"value", values}});
    }
    json classes = json::array();
    for (Polarity p : kClassOrder) classes.push_back(to_string(p));
    return {{"format_version", 1},
            {"config", json_io::config_to_json(m.config_)},
            {"class_order", classes},
            {"dim", m.dim_},
            {"fallback", to_string(m.fallback_)},
            {"initial_scores", m.init_},
            {"trees", trees}};
  }

  static TrainedModel from_json(const json& j) {
    if (j.at("format_version").get<int>() != 1) {
      throw FormatError("unsupported model format_version " +
                        j.at("format_version").dump());
    }
    std::vector<std::string> order = j.at("class_order");
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      if (order.size() != kNumClasses || order[c] != to_string(class_at(c))) {
        throw FormatError("model class order differs from negative,neutral,positive");
      }
    }
    TrainedModel m;
    m.config_ = json_io::config_from_json(j.at("config"));
    m.dim_ = j.at("dim").get<std::size_t>();
    auto fallback = parse_polarity(j.at("fallback").get<std::string>());
    if (!fallback) throw FormatError("model fallback label is invalid");
    m.fallback_ = *fallback;
    m.init_ = j.at("initial_scores").get<std::array<double, kNumClasses>>();
    for (const json& jt : j.at("trees")) {
      Tree t;
      jt.at("feature").get_to(t.feature);
      jt.at("threshold").get_to(t.threshold);
      jt.at("left").get_to(t.left);
      jt.at("right").get_to(t.right);
      for (const json& v : jt.at("value")) {
        t.value.push_back(v.get<std::array<double, kNumClasses>>());
      }
      const std::size_t n = t.feature.size();
      if (t.threshold.size() != n || t.left.size() != n || t.right.size() != n ||
          t.value.size() != n || n == 0) {
        throw FormatError("model tree arrays differ in length");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (t.feature[i] < 0) continue;
        const auto in_range = [&](std::int32_t c) {
          return c > static_cast<std::int32_t>(i) && c < static_cast<std::int32_t>(n);
        };
        if (!in_range(t.left[i]) || !in_range(t.right[i]) ||
            static_cast<std::size_t>(t.feature[i]) >= m.dim_) {
          throw FormatError("model tree node " + std::to_string(i) +
                            " references an invalid child or feature");
        }
      }
      m.trees_.push_back(std::move(t));
    }
    if (m.trees_.empty()) throw FormatError("model has no trees");
    return m;
  }
};

std::string TrainedModel::to_json() const {
  return ModelAccess::to_json(*this).dump() + "\n";
}

TrainedModel TrainedModel::from_json(std::string_view text,
                                     std::string_view source) {
  const json j = json_io::parse_document(text, source);
  try {
    return ModelAccess::from_json(j);
  } catch (const json::exception& e) {
    throw FormatError(std::string(source) + ": " + e.what());
  }
}

}  // namespace learner

namespace json_io {

json parse_document(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string(source) + ": " + e.what());
  }
}

json config_to_json(const learner::LearnerConfig& cfg) {
  return {{"algorithm", learner::to_string(cfg.algorithm)},
          {"n_trees", cfg.n_trees},
          {"max_depth", cfg.max_depth ? json(*cfg.max_depth) : json(nullptr)},
          {"min_leaf", cfg.min_leaf},
          {"max_features", learner::to_string(cfg.max_features)},
          {"learning_rate", cfg.learning_rate},
          {"seed", cfg.seed}};
}

learner::LearnerConfig config_from_json(const json& j) {
  learner::LearnerConfig cfg;
  if (j.contains("algorithm")) {
    cfg.algorithm = learner::parse_algorithm(j.at("algorithm").get<std::string>());
  }
  if (j.contains("n_trees")) cfg.n_trees = j.at("n_trees").get<int>();
  if (j.contains("max_depth")) {
    const json& d = j.at("max_depth");
    if (d.is_null() || (d.is_string() && d.get<std::string>() == "none")) {
      cfg.max_depth.reset();
    } else {
      cfg.max_depth = d.get<int>();
    }
  }
  if (j.contains("min_leaf")) cfg.min_leaf = j.at("min_leaf").get<int>();
  if (j.contains("max_features")) {
    cfg.max_features =
        learner::parse_max_features(j.at("max_features").get<std::string>());
  }
  if (j.contains("learning_rate")) {
    cfg.learning_rate = j.at("learning_rate").get<double>();
  }
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("threads")) cfg.threads = j.at("threads").get<unsigned>();
  for (const auto& [key, value] : j.items()) {
    static const std::vector<std::string> kKnown = {
        "algorithm", "n_trees", "max_depth", "min_leaf",
        "max_features", "learning_rate", "seed", "threads"};
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      throw ConfigError("unknown learner setting '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

json model_to_json(const learner::TrainedModel& m) {
  return learner::ModelAccess::to_json(m);
}

learner::TrainedModel model_from_json(const json& j) {
  return learner::ModelAccess::from_json(j);
}

json vocabulary_to_json(const Vocabulary& v) {
  return {{"fitted_on", v.fitted_on()},
          {"document_count", v.document_count()},
          {"terms", std::vector<std::string>(v.terms().begin(), v.terms().end())},
          {"idf", std::vector<double>(v.idf().begin(), v.idf().end())}};
}

Vocabulary vocabulary_from_json(const json& j) {
  return Vocabulary::from_parts(j.at("terms").get<std::vector<std::string>>(),
                                j.at("idf").get<std::vector<double>>(),
                                j.at("document_count").get<std::size_t>(),
                                j.at("fitted_on").get<std::string>());
}

namespace {

std::vector<std::string> sorted(const WordSet& s) {
  std::vector<std::string> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

json sorted_map(const std::unordered_map<std::string, std::string>& m) {
  std::vector<std::pair<std::string, std::string>> v(m.begin(), m.end());
  std::sort(v.begin(), v.end());
  json out = json::array();
  for (auto& [k, val] : v) out.push_back({k, val});
  return out;
}

std::unordered_map<std::string, std::string> pairs_from(const json& j) {
  std::unordered_map<std::string, std::string> m;
  for (const json& p : j) m.emplace(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  return m;
}

WordSet set_from(const json& j) {
  WordSet s;
  for (const json& w : j) s.insert(w.get<std::string>());
  return s;
}

json lexicon_to_json(const SentimentLexicon& lex) {
  json entries = json::array();
  for (const std::string& w : lex.words()) entries.push_back({w, *lex.score(w)});
  return entries;
}

SentimentLexicon lexicon_from_json(const json& entries, LexiconMode mode) {
  std::unordered_map<std::string, int> m;
  for (const json& e : entries) m.emplace(e.at(0).get<std::string>(), e.at(1).get<int>());
  return SentimentLexicon(mode, std::move(m));
}

}  // namespace

json resources_to_json(const TextResources& r) {
  return {{"stopwords", sorted(r.stopwords)},
          {"emoticons", sorted_map(r.emoticons)},
          {"contractions", sorted_map(r.contractions)},
          {"adjectives", sorted(r.adjectives)},
          {"verbs", sorted(r.verbs)},
          {"abbreviations", sorted(r.abbreviations)}};
}

TextResources resources_from_json(const json& j) {
  TextResources r;
  r.stopwords = set_from(j.at("stopwords"));
  r.emoticons = pairs_from(j.at("emoticons"));
  r.contractions = pairs_from(j.at("contractions"));
  r.adjectives = set_from(j.at("adjectives"));
  r.verbs = set_from(j.at("verbs"));
  r.abbreviations = set_from(j.at("abbreviations"));
  return r;
}

json detector_to_json(const Detector& d) {
  json out = {{"name", d.name()}, {"kind", to_string(d.kind())}};
  if (const auto* dso = dynamic_cast<const DsoDetector*>(&d)) {
    out["lexicon"] = lexicon_to_json(dso->lexicon());
    out["negation_window"] = dso->negation_window();
  } else if (const auto* val = dynamic_cast<const ValenceDetector*>(&d)) {
    out["lexicon"] = lexicon_to_json(val->lexicon());
  } else if (const auto* pat = dynamic_cast<const PatternDetector*>(&d)) {
    json rules = json::array();
    for (const PatternRule& r : pat->rules()) {
      rules.push_back({{"id", r.id},
                       {"aspect_terms", r.aspect_terms},
                       {"cue_terms", r.cue_terms},
                       {"max_gap", r.max_gap},
                       {"order", to_string(r.order)},
                       {"label", to_string(r.label)}});
    }
    out["rules"] = rules;
  } else {
    throw ConfigError("detector '" + d.name() + "' of kind " +
                      std::string(to_string(d.kind())) + " cannot be embedded");
  }
  return out;
}

std::shared_ptr<const Detector> detector_from_json(const json& j) {
  const std::string name = j.at("name");
  switch (parse_detector_kind(j.at("kind").get<std::string>())) {
    case DetectorKind::kDso:
      return std::make_shared<DsoDetector>(
          name,
          std::make_shared<SentimentLexicon>(
              lexicon_from_json(j.at("lexicon"), LexiconMode::kDso)),
          j.at("negation_window").get<int>());
    case DetectorKind::kValence:
      return std::make_shared<ValenceDetector>(
          name, std::make_shared<SentimentLexicon>(
                    lexicon_from_json(j.at("lexicon"), LexiconMode::kValence)));
    case DetectorKind::kPattern: {
      std::vector<PatternRule> rules;
      for (const json& jr : j.at("rules")) {
        PatternRule r;
        r.id = jr.at("id");
        jr.at("aspect_terms").get_to(r.aspect_terms);
        jr.at("cue_terms").get_to(r.cue_terms);
        r.max_gap = jr.at("max_gap");
        const std::string order = jr.at("order");
        if (order == to_string(PatternOrder::kAspectThenCue)) {
          r.order = PatternOrder::kAspectThenCue;
        } else if (order == to_string(PatternOrder::kCueThenAspect)) {
          r.order = PatternOrder::kCueThenAspect;
        } else if (order == to_string(PatternOrder::kEither)) {
          r.order = PatternOrder::kEither;
        } else {
          throw FormatError("pattern rule '" + r.id + "' has order '" + order + "'");
        }
        auto label = parse_polarity(jr.at("label").get<std::string>());
        if (!label) throw FormatError("pattern rule '" + r.id + "' has a bad label");
        r.label = *label;
        rules.push_back(std::move(r));
      }
      return std::make_shared<PatternDetector>(name, std::move(rules));
    }
    default:
      throw FormatError("embedded detector '" + name + "' is not rule-based");
  }
}

}  // namespace json_io

std::string EnsembleBundle::to_json() const {
  using json_io::json;
  json ctx = {{"resources", context.resources
                                ? json_io::resources_to_json(*context.resources)
                                : json(nullptr)},
              {"partial_base", context.partial_base
                                   ? json_io::detector_to_json(*context.partial_base)
                                   : json(nullptr)}};
  std::vector<std::string> words(context.sentiment_words.begin(),
                                 context.sentiment_words.end());
  std::sort(words.begin(), words.end());
  ctx["sentiment_words"] = words;
  json j = {{"format_version", kFormatVersion},
            {"roster", roster},
            {"variant", variant.name()},
            {"vocabulary", json_io::vocabulary_to_json(vocabulary)},
            {"model", json_io::model_to_json(model)},
            {"context", ctx}};
  return j.dump() + "\n";
}

EnsembleBundle EnsembleBundle::from_json(std::string_view text,
                                         std::string_view source) {
  const auto j = json_io::parse_document(text, source);
  try {
    if (j.at("format_version").get<int>() != kFormatVersion) {
      throw FormatError(std::string(source) + ": unsupported bundle format_version " +
                        j.at("format_version").dump());
    }
    EnsembleBundle b;
    j.at("roster").get_to(b.roster);
    b.variant = Variant::parse(j.at("variant").get<std::string>());
    b.vocabulary = json_io::vocabulary_from_json(j.at("vocabulary"));
    b.model = json_io::model_from_json(j.at("model"));
    const auto& ctx = j.at("context");
    if (!ctx.at("resources").is_null()) {
      b.context.resources = std::make_shared<const TextResources>(
          json_io::resources_from_json(ctx.at("resources")));
    }
    if (!ctx.at("partial_base").is_null()) {
      b.context.partial_base = json_io::detector_from_json(ctx.at("partial_base"));
    }
    for (const auto& w : ctx.at("sentiment_words")) {
      b.context.sentiment_words.insert(w.get<std::string>());
    }
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string(source) + ": " + e.what());
  }
}

}  // namespace sentisead

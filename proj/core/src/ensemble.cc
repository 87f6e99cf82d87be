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


#include "sentisead/ensemble.h"

#include <algorithm>
#include <set>

#include "sentisead/csv.h"
#include "sentisead/error.h"

namespace sentisead {

std::string_view to_string(TieRule rule) {
  switch (rule) {
    case TieRule::kNeutral: return "neutral";
    case TieRule::kPriorityOrder: return "priority-order";
    case TieRule::kAbstainError: return "abstain-error";
  }
  return "neutral";
}

TieRule parse_tie_rule(std::string_view s) {
  const std::string t = to_lower(trim(s));
  if (t == "neutral") return TieRule::kNeutral;
  if (t == "priority-order") return TieRule::kPriorityOrder;
  if (t == "abstain-error") return TieRule::kAbstainError;
  throw ConfigError("unknown tie rule '" + std::string(s) +
                    "' (neutral, priority-order, abstain-error)");
}

namespace {

void check_roster(std::span<const std::string> roster, std::string_view what) {
  if (roster.empty()) throw ConfigError(std::string(what) + ": empty roster");
  std::set<std::string_view> seen;
  for (const std::string& name : roster) {
    if (!seen.insert(name).second) {
      throw ConfigError(std::string(what) + ": detector '" + name +
                        "' appears twice in the roster");
    }
  }
}

}  // namespace

void VotePolicy::validate() const { check_roster(roster, "vote policy"); }

void EnsembleSpec::validate() const {
  check_roster(roster, "ensemble");
  learner.validate();
}

namespace ensemble {

Polarity majority_vote(std::span<const Polarity> labels,
                       const VotePolicy& policy) {
  if (labels.size() != policy.roster.size()) {
    throw LayoutError("majority vote: " + std::to_string(labels.size()) +
                      " labels for a roster of " +
                      std::to_string(policy.roster.size()));
  }
  if (labels.empty()) throw ConfigError("vote policy: empty roster");
  std::array<std::size_t, kNumClasses> counts{};
  for (Polarity p : labels) ++counts[class_index(p)];
  const std::size_t top = *std::max_element(counts.begin(), counts.end());
  std::vector<Polarity> tied;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    if (counts[c] == top) tied.push_back(class_at(c));
  }
  if (tied.size() == 1) return tied.front();

  switch (policy.tie_rule) {
    case TieRule::kNeutral:
      return Polarity::kNeutral;
    case TieRule::kPriorityOrder:
      for (Polarity p : labels) {
        if (std::find(tied.begin(), tied.end(), p) != tied.end()) return p;
      }
      break;
    case TieRule::kAbstainError:
      break;
  }
  std::vector<std::string> names;
  std::string joined;
  for (Polarity p : tied) {
    names.emplace_back(to_string(p));
    joined += (joined.empty() ? "" : ", ") + names.back();
  }
  throw TieError("majority vote tied between " + joined, std::move(names));
}

std::vector<Polarity> vote_matrix(const PredictionMatrix& pm,
                                  const VotePolicy& policy) {
  policy.validate();
  for (const std::string& name : policy.roster) pm.detector_index(name);
  std::vector<Polarity> out;
  out.reserve(pm.size());
  for (std::size_t r = 0; r < pm.size(); ++r) {
    out.push_back(majority_vote(pm.labels_for(r, policy.roster), policy));
  }
  return out;
}

namespace {

// Matrix row of every dataset unit, in dataset order.
std::vector<std::size_t> align_rows(const Dataset& d,
                                    const PredictionMatrix& matrix,
                                    std::span<const std::string> roster) {
  for (const std::string& name : roster) {
    if (!matrix.find_detector(name)) {
      throw CoverageError("prediction matrix has no column for roster detector '" +
                          name + "'");
    }
  }
  std::vector<std::size_t> rows;
  rows.reserve(d.size());
  for (const Unit& u : d.units()) {
    auto r = matrix.find_row(u.id);
    if (!r) {
      throw CoverageError("prediction matrix has no row for unit '" + u.id + "'");
    }
    rows.push_back(*r);
  }
  return rows;
}

learner::TrainedModel fit_rows(const std::vector<FeatureVector>& X,
                               const std::vector<Polarity>& y,
                               const EnsembleSpec& spec) {
  learner::TrainingSet set{X, y};
  set = learner::oversample(std::move(set), spec.oversample, spec.learner.seed);
  return learner::fit(set, spec.learner);
}

}  // namespace

CrossValidatedRun train_sentisead(const Dataset& d, const FoldAssignment& folds,
                                  const PredictionMatrix& matrix,
                                  const EnsembleSpec& spec,
                                  const FeatureContext& ctx) {
  spec.validate();
  if (!folds.matches(d)) {
    throw FoldMismatchError("fold assignment does not cover dataset '" +
                            d.name() + "'");
  }
  if (!matrix.fold_fingerprint().empty() &&
      matrix.fold_fingerprint() != folds.fingerprint()) {
    throw FoldMismatchError("prediction matrix was produced under folds " +
                            matrix.fold_fingerprint() + ", run uses " +
                            folds.fingerprint());
  }
  const std::vector<std::size_t> rows = align_rows(d, matrix, spec.roster);

  std::vector<UnitAnalysis> analyses;
  std::vector<std::vector<Polarity>> labels;
  std::vector<int> fold_of;
  analyses.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    analyses.push_back(ctx.analyze(d[i]));
    labels.push_back(matrix.labels_for(rows[i], spec.roster));
    fold_of.push_back(folds.fold_of(d[i].id));
  }

  CrossValidatedRun run;
  run.ids.reserve(d.size());
  for (const Unit& u : d.units()) {
    run.ids.push_back(u.id);
    run.gold.push_back(u.gold);
  }
  run.predicted.assign(d.size(), Polarity::kNeutral);
  run.test_fold.assign(d.size(), -1);

  for (int r = 0; r < folds.k(); ++r) {
    std::vector<std::size_t> train, test;
    for (std::size_t i = 0; i < d.size(); ++i) {
      (fold_of[i] == r ? test : train).push_back(i);
    }
    if (test.empty()) {
      run.vocabularies.emplace_back();
      continue;
    }
    Vocabulary vocab;
    if (spec.variant.bow) {
      std::vector<TokenStream> docs;
      docs.reserve(train.size());
      for (std::size_t i : train) docs.push_back(analyses[i].tokens);
      vocab = Vocabulary::fit(docs, "rotation " + std::to_string(r));
    }
    FeatureAssembler assembler(spec.roster, spec.variant, &vocab);
    std::vector<FeatureVector> X;
    std::vector<Polarity> y;
    X.reserve(train.size());
    for (std::size_t i : train) {
      X.push_back(assembler.assemble(analyses[i], labels[i]));
      y.push_back(d[i].gold);
    }
    const learner::TrainedModel model = fit_rows(X, y, spec);
    for (std::size_t i : test) {
      run.predicted[i] = model.predict(assembler.assemble(analyses[i], labels[i]));
      run.test_fold[i] = r;
    }
    run.vocabularies.push_back(std::move(vocab));
  }
  return run;
}

EnsembleBundle train_bundle(const Dataset& d, const PredictionMatrix& matrix,
                            const EnsembleSpec& spec,
                            const FeatureContext& ctx) {
  spec.validate();
  const std::vector<std::size_t> rows = align_rows(d, matrix, spec.roster);
  std::vector<UnitAnalysis> analyses;
  analyses.reserve(d.size());
  for (const Unit& u : d.units()) analyses.push_back(ctx.analyze(u));

  EnsembleBundle bundle;
  bundle.roster = spec.roster;
  bundle.variant = spec.variant;
  bundle.context = ctx;
  if (spec.variant.bow) {
    std::vector<TokenStream> docs;
    docs.reserve(analyses.size());
    for (const UnitAnalysis& a : analyses) docs.push_back(a.tokens);
    bundle.vocabulary = Vocabulary::fit(docs, "all");
  }
  FeatureAssembler assembler(spec.roster, spec.variant, &bundle.vocabulary);
  std::vector<FeatureVector> X;
  std::vector<Polarity> y;
  for (std::size_t i = 0; i < d.size(); ++i) {
    X.push_back(assembler.assemble(analyses[i],
                                   matrix.labels_for(rows[i], spec.roster)));
    y.push_back(d[i].gold);
  }
  bundle.model = fit_rows(X, y, spec);
  return bundle;
}

Polarity predict_sentisead(
    const EnsembleBundle& bundle, std::string_view text,
    const std::unordered_map<std::string, Polarity>& labels) {
  std::vector<Polarity> ordered;
  ordered.reserve(bundle.roster.size());
  for (const std::string& name : bundle.roster) {
    auto it = labels.find(name);
    if (it == labels.end()) {
      throw CoverageError("no label supplied for roster detector '" + name + "'");
    }
    ordered.push_back(it->second);
  }
  FeatureAssembler assembler(bundle.roster, bundle.variant, &bundle.vocabulary);
  const Unit unit{"", std::string(text), Polarity::kNeutral};
  return bundle.model.predict(
      assembler.assemble(bundle.context.analyze(unit), ordered));
}

}  // namespace ensemble

void EnsembleBundle::save(const std::filesystem::path& path) const {
  write_file_atomic(path, to_json());
}

EnsembleBundle EnsembleBundle::load(const std::filesystem::path& path) {
  return from_json(read_text_file(path), path.string());
}

}  // namespace sentisead

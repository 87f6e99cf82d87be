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


#include "commands.h"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "run_config.h"
#include "sentisead/corpus.h"
#include "sentisead/csv.h"
#include "sentisead/detectors.h"
#include "sentisead/ensemble.h"
#include "sentisead/error.h"
#include "sentisead/eval.h"
#include "sentisead/report.h"
#include "sentisead/sweep.h"

namespace sentisead::cli {
namespace {

namespace fs = std::filesystem;

struct Common {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "md";
  std::string config;
  std::string dataset;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Global seed (default 45)");
  cmd->add_option("--out", c.out, "Primary output path");
  cmd->add_option("--format", c.format, "Report format: csv or md")
      ->check(CLI::IsMember({"csv", "md"}));
}

RunConfig load_config(const Common& c) {
  RunConfig cfg = c.config.empty() ? RunConfig() : RunConfig::load(c.config);
  if (c.seed) cfg.seed = *c.seed;
  if (!c.dataset.empty()) cfg.dataset = c.dataset;
  return cfg;
}

// Writes `content` to --out when given, else to stdout.
void emit(const Common& c, const std::string& content, std::ostream& out) {
  if (c.out.empty()) {
    out << content;
  } else {
    write_file_atomic(c.out, content);
  }
}

Dataset load(const RunConfig& cfg) {
  return corpus::load_dataset(cfg.dataset, cfg.name());
}

FoldAssignment folds_for(const RunConfig& cfg, const Dataset& d,
                         const std::string& fold_file) {
  if (!fold_file.empty()) {
    return corpus::align_to(corpus::read_fold_file(fold_file), d);
  }
  return corpus::stratified_folds(d, cfg.k, cfg.folds_seed());
}

std::string predictions_csv(const CrossValidatedRun& run,
                            const PredictionMatrix* explain,
                            std::span<const std::string> roster) {
  std::vector<std::string> header = {"id", "gold", "predicted"};
  if (explain) header.insert(header.end(), roster.begin(), roster.end());
  std::string text = csv_line(header);
  for (std::size_t i = 0; i < run.ids.size(); ++i) {
    std::vector<std::string> row = {run.ids[i], std::string(to_string(run.gold[i])),
                                    std::string(to_string(run.predicted[i]))};
    if (explain) {
      const auto r = explain->find_row(run.ids[i]);
      for (Polarity p : explain->labels_for(*r, roster)) row.emplace_back(to_string(p));
    }
    text += csv_line(row);
  }
  return text;
}

report::NamedReport named(std::string name, std::span<const Polarity> gold,
                          std::span<const Polarity> pred,
                          KappaWeighting w = KappaWeighting::kQuadratic) {
  return {std::move(name), eval::metrics(eval::confusion(gold, pred), w)};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  for (const std::string& f : split_fields(s, ',')) {
    std::string t(trim(f));
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_detect(const Common& c, std::ostream& out) {
  RunConfig cfg = load_config(c);
  cfg.validate();
  if (cfg.roster.empty()) throw ConfigError("detect: the roster is empty");

  const Dataset d = load(cfg);
  const FoldAssignment folds = corpus::stratified_folds(d, cfg.k, cfg.folds_seed());
  PredictionMatrix pm = PredictionMatrix::from_dataset(d, folds.fingerprint());
  auto resources = TextResources::load_default();

  for (const DetectorEntry& e : cfg.roster) {
    std::vector<Polarity> labels(d.size(), Polarity::kNeutral);
    if (e.kind == DetectorKind::kBow) {
      const learner::LearnerConfig base = cfg.detector_learner(e);
      for (int r = 0; r < folds.k(); ++r) {
        std::vector<Unit> train;
        std::vector<std::size_t> test;
        for (std::size_t i = 0; i < d.size(); ++i) {
          if (folds.fold_of(d[i].id) == r) {
            test.push_back(i);
          } else {
            train.push_back(d[i]);
          }
        }
        if (test.empty()) continue;
        BowConfig bc;
        bc.learner = base;
        bc.learner.seed = derive_seed(base.seed, static_cast<std::uint64_t>(r));
        bc.oversample = e.oversample;
        auto bow = detectors::bow_train(train, bc, resources, e.name,
                                        "rotation " + std::to_string(r));
        for (std::size_t i : test) labels[i] = bow->classify(d[i]);
      }
    } else {
      const auto det = make_detector(e);
      for (std::size_t i = 0; i < d.size(); ++i) labels[i] = det->classify(d[i]);
    }
    pm.add_column(e.name, std::move(labels), std::string(to_string(e.kind)));
  }

  const fs::path matrix_path = c.out.empty() ? cfg.out / "predictions.csv" : fs::path(c.out);
  if (matrix_path.has_parent_path()) fs::create_directories(matrix_path.parent_path());
  pm.save(matrix_path);
  corpus::write_fold_file(matrix_path.parent_path() / "folds.csv", folds);

  std::vector<report::NamedReport> reports;
  const auto gold = pm.gold();
  for (const std::string& name : pm.detectors()) {
    reports.push_back(named(name, gold, pm.column(name)));
  }
  out << report::performance_table(reports).render(report::parse_format(c.format));
  return 0;
}

int cmd_folds(const Common& c, int k, bool k_set, std::ostream& out) {
  RunConfig cfg = load_config(c);
  if (k_set) cfg.k = k;
  if (cfg.dataset.empty()) throw ConfigError("folds: --dataset or --config required");
  if (c.seed) cfg.fold_seed = *c.seed;
  const Dataset d = load(cfg);
  const FoldAssignment fa = corpus::stratified_folds(d, cfg.k, cfg.folds_seed());
  emit(c, fa.to_csv(), out);
  return 0;
}

int cmd_vote(const Common& c, const std::string& matrix,
             const std::string& roster, const std::string& tie_rule,
             std::ostream& out) {
  RunConfig cfg = load_config(c);
  const PredictionMatrix pm = PredictionMatrix::load(matrix);
  VotePolicy policy;
  policy.tie_rule = tie_rule.empty() ? cfg.tie_rule : parse_tie_rule(tie_rule);
  policy.roster = roster.empty()
                      ? std::vector<std::string>(pm.detectors().begin(),
                                                 pm.detectors().end())
                      : split_list(roster);
  const auto votes = ensemble::vote_matrix(pm, policy);
  std::string text = csv_line({"id", "gold", "predicted"});
  for (std::size_t r = 0; r < pm.size(); ++r) {
    const auto& row = pm.rows()[r];
    text += csv_line({row.id, std::string(to_string(row.gold)),
                      std::string(to_string(votes[r]))});
  }
  emit(c, text, out);
  if (!c.out.empty()) {
    const auto gold = pm.gold();
    std::vector<report::NamedReport> reports = {named("majority", gold, votes)};
    out << report::performance_table(reports).render(report::parse_format(c.format));
  }
  return 0;
}

int cmd_train_ensemble(const Common& c, const std::string& matrix_arg,
                       const std::string& fold_file, const std::string& variant,
                       const std::string& bundle_arg, bool explain,
                       bool no_bundle, std::ostream& out) {
  RunConfig cfg = load_config(c);
  if (!variant.empty()) cfg.variant = Variant::parse(variant);
  cfg.validate();
  const Dataset d = load(cfg);
  const FoldAssignment folds = folds_for(cfg, d, fold_file);
  const fs::path matrix_path =
      matrix_arg.empty() ? cfg.out / "predictions.csv" : fs::path(matrix_arg);
  const PredictionMatrix pm = PredictionMatrix::load(matrix_path);
  const EnsembleSpec spec = cfg.ensemble_spec();
  const FeatureContext ctx = make_feature_context(cfg);

  const CrossValidatedRun run = ensemble::train_sentisead(d, folds, pm, spec, ctx);
  const fs::path out_path =
      c.out.empty() ? cfg.out / "sentisead_predictions.csv" : fs::path(c.out);
  if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
  write_file_atomic(out_path, predictions_csv(run, explain ? &pm : nullptr, spec.roster));

  if (!no_bundle) {
    const fs::path bundle_path =
        bundle_arg.empty() ? out_path.parent_path() / "sentisead_bundle.json"
                           : fs::path(bundle_arg);
    ensemble::train_bundle(d, pm, spec, ctx).save(bundle_path);
  }

  std::vector<report::NamedReport> reports;
  for (const std::string& name : spec.roster) {
    reports.push_back(named(name, pm.gold(), pm.column(name)));
  }
  reports.push_back(named("sentisead-" + spec.variant.name(), run.gold, run.predicted));
  out << report::performance_table(reports).render(report::parse_format(c.format));
  return 0;
}

int cmd_predict(const Common& c, const std::string& bundle_path,
                const std::string& input, const std::string& labels_path,
                bool explain, std::ostream& out) {
  const EnsembleBundle bundle = EnsembleBundle::load(bundle_path);
  const CsvTable units = read_csv(input);
  const std::size_t id_col = units.column("id");
  const std::size_t text_col = units.column("text");
  const auto gold_col = units.find_column("label");

  const CsvTable labels = read_csv(labels_path);
  const std::size_t lid = labels.column("id");
  std::vector<std::size_t> roster_cols;
  for (const std::string& name : bundle.roster) roster_cols.push_back(labels.column(name));
  std::map<std::string, std::size_t> label_rows;
  for (std::size_t r = 0; r < labels.rows.size(); ++r) {
    label_rows.emplace(labels.rows[r][lid], r);
  }

  std::vector<std::string> header = {"id"};
  if (gold_col) header.push_back("gold");
  header.push_back("predicted");
  if (explain) header.insert(header.end(), bundle.roster.begin(), bundle.roster.end());
  std::string text = csv_line(header);
  for (std::size_t r = 0; r < units.rows.size(); ++r) {
    const auto& row = units.rows[r];
    auto it = label_rows.find(row[id_col]);
    if (it == label_rows.end()) {
      throw CoverageError(units.where(r) + ": no detector labels for id '" +
                          row[id_col] + "' in " + labels.source);
    }
    std::unordered_map<std::string, Polarity> live;
    for (std::size_t k = 0; k < bundle.roster.size(); ++k) {
      const std::string& cell = labels.rows[it->second][roster_cols[k]];
      auto p = parse_polarity(cell);
      if (!p) {
        throw LabelError(labels.where(it->second) + ": unknown label '" + cell + "'");
      }
      live.emplace(bundle.roster[k], *p);
    }
    std::vector<std::string> fields = {row[id_col]};
    if (gold_col) fields.push_back(row[*gold_col]);
    fields.emplace_back(to_string(ensemble::predict_sentisead(bundle, row[text_col], live)));
    if (explain) {
      for (const std::string& name : bundle.roster) {
        fields.emplace_back(to_string(live.at(name)));
      }
    }
    text += csv_line(fields);
  }
  emit(c, text, out);
  return 0;
}

int cmd_eval(const Common& c, const std::string& matrix,
             const std::vector<std::string>& predictions,
             const std::string& kappa, bool detail, std::ostream& out) {
  const KappaWeighting w =
      kappa == "linear" ? KappaWeighting::kLinear : KappaWeighting::kQuadratic;
  std::vector<report::NamedReport> reports;
  std::vector<std::pair<std::string, ConfusionMatrix>> confusions;
  auto add_matrix = [&](const PredictionMatrix& pm, const std::string& prefix) {
    const auto gold = pm.gold();
    for (const std::string& name : pm.detectors()) {
      const std::string label =
          name == "predicted" && !prefix.empty() ? prefix : name;
      const auto col = pm.column(name);
      reports.push_back(named(label, gold, col, w));
      confusions.emplace_back(label, eval::confusion(gold, col));
    }
  };
  if (!matrix.empty()) add_matrix(PredictionMatrix::load(matrix), "");
  for (const std::string& p : predictions) {
    PredictionMatrix pm = PredictionMatrix::load(p);
    add_matrix(pm.select(std::vector<std::string>{"predicted"}), fs::path(p).stem().string());
  }
  if (reports.empty()) throw ConfigError("eval: give --matrix or --predictions");

  const auto fmt = report::parse_format(c.format);
  std::string text = report::performance_table(reports).render(fmt);
  if (detail) {
    text += "\n" + report::per_class_table(reports).render(fmt);
    for (const auto& [name, cm] : confusions) {
      text += "\n" + (fmt == report::Format::kMarkdown ? "**" + name + "**\n\n" : name + "\n");
      text += report::confusion_table(cm).render(fmt);
    }
  }
  emit(c, text, out);
  return 0;
}

int cmd_complement(const Common& c, const std::string& matrix,
                   const std::string& roster, const std::string& group,
                   std::ostream& out) {
  PredictionMatrix pm = PredictionMatrix::load(matrix);
  if (!roster.empty()) pm = pm.select(split_list(roster));
  std::vector<PolarityGroup> groups;
  if (group == "both" || group == "non-neutral") groups.push_back(PolarityGroup::kNonNeutral);
  if (group == "both" || group == "neutral") groups.push_back(PolarityGroup::kNeutral);
  std::vector<ComplementarityRow> rows;
  for (PolarityGroup g : groups) {
    auto part = eval::complementarity(pm, g);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  const std::vector<std::string> tools(pm.detectors().begin(), pm.detectors().end());
  const auto fmt = report::parse_format(c.format);
  emit(c, report::complementarity_table(rows, tools, fmt).render(fmt), out);
  return 0;
}

int cmd_error_report(const Common& c, const std::string& matrix,
                     const std::string& tags_path,
                     const std::vector<std::string>& detectors,
                     std::ostream& out) {
  const PredictionMatrix pm = PredictionMatrix::load(matrix);
  const auto tags = eval::read_error_tags(tags_path);
  std::vector<std::string> names = detectors;
  if (names.empty()) names.assign(pm.detectors().begin(), pm.detectors().end());
  const auto fmt = report::parse_format(c.format);
  report::Table all;
  for (const std::string& name : names) {
    auto t = report::error_report_table(name, eval::error_report(pm, name, tags), fmt);
    if (all.header.empty()) all.header = t.header;
    all.rows.insert(all.rows.end(), t.rows.begin(), t.rows.end());
  }
  emit(c, all.render(fmt), out);
  return 0;
}

int cmd_sweep(const Common& c, const std::string& matrix_arg,
              const std::string& fold_file, const std::vector<std::string>& grid_args,
              std::ostream& out) {
  RunConfig cfg = load_config(c);
  cfg.validate();
  learner::Grid grid;
  for (const std::string& g : grid_args) {
    const auto eq = g.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError("--grid expects key=v1,v2,..., got '" + g + "'");
    }
    grid.emplace_back(std::string(trim(g.substr(0, eq))), split_list(g.substr(eq + 1)));
  }
  const Dataset d = load(cfg);
  const FoldAssignment folds = folds_for(cfg, d, fold_file);
  const fs::path matrix_path =
      matrix_arg.empty() ? cfg.out / "predictions.csv" : fs::path(matrix_arg);
  const PredictionMatrix pm = PredictionMatrix::load(matrix_path);
  const auto result = learner::grid_sweep(d, folds, pm, grid, cfg.ensemble_spec(),
                                          make_feature_context(cfg));
  report::Table t;
  for (const auto& [key, values] : grid) t.header.push_back(key);
  t.header.push_back("macro_f1");
  for (const auto& row : result.table) {
    std::vector<std::string> cells;
    for (const auto& [key, value] : row.point) cells.push_back(value);
    cells.push_back(report::fixed(row.macro_f1, 4));
    t.rows.push_back(std::move(cells));
  }
  const auto fmt = report::parse_format(c.format);
  emit(c, t.render(fmt), out);
  if (!c.out.empty() || fmt == report::Format::kMarkdown) {
    out << "\nbest: " << result.best.describe() << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hybrid sentiment detection toolkit for software-engineering text", "sentisead"};
  app.require_subcommand(1);
  Common common;

  auto* detect = app.add_subcommand("detect", "Run the detector roster into a prediction matrix");
  add_common(detect, common);
  detect->add_option("--config", common.config, "Run configuration (JSON)")->required();
  detect->add_option("--dataset", common.dataset, "Override the dataset path");

  int k = 10;
  auto* folds = app.add_subcommand("folds", "Emit a stratified id,fold assignment");
  add_common(folds, common);
  folds->add_option("--config", common.config, "Run configuration (JSON)");
  folds->add_option("--dataset", common.dataset, "Dataset CSV (id,text,label)");
  auto* k_opt = folds->add_option("--k", k, "Fold count");

  std::string matrix, roster, tie_rule;
  auto* vote = app.add_subcommand("vote", "Majority vote over matrix columns");
  add_common(vote, common);
  vote->add_option("--config", common.config, "Run configuration (JSON)");
  vote->add_option("--matrix", matrix, "Prediction matrix CSV")->required();
  vote->add_option("--roster", roster, "Comma-separated detector names");
  vote->add_option("--tie-rule", tie_rule, "neutral, priority-order or abstain-error");

  std::string fold_file, variant, bundle;
  bool explain = false, no_bundle = false;
  auto* train = app.add_subcommand("train-ensemble", "Cross-validate the stacking ensemble");
  add_common(train, common);
  train->add_option("--config", common.config, "Run configuration (JSON)")->required();
  train->add_option("--dataset", common.dataset, "Override the dataset path");
  train->add_option("--matrix", matrix, "Prediction matrix CSV");
  train->add_option("--folds", fold_file, "id,fold CSV (default: recomputed)");
  train->add_option("--variant", variant, "B, N, B+, BNE+, BNP+, N+, NNE+, NNP+");
  train->add_option("--bundle", bundle, "Where to write the deployable bundle");
  train->add_flag("--no-bundle", no_bundle, "Skip fitting the full-data bundle");
  train->add_flag("--explain", explain, "Add one column per roster detector");

  std::string input, labels;
  auto* predict = app.add_subcommand("predict", "Label texts with a trained bundle");
  add_common(predict, common);
  predict->add_option("--bundle", bundle, "Bundle JSON")->required();
  predict->add_option("--input", input, "CSV with id,text")->required();
  predict->add_option("--labels", labels, "CSV with id and one column per roster detector")
      ->required();
  predict->add_flag("--explain", explain, "Add one column per roster detector");

  std::vector<std::string> predictions;
  std::string kappa = "quadratic";
  bool detail = false;
  auto* evalc = app.add_subcommand("eval", "Macro/micro P-R-F1 and weighted kappa");
  add_common(evalc, common);
  evalc->add_option("--matrix", matrix, "Prediction matrix CSV");
  evalc->add_option("--predictions", predictions, "id,gold,predicted CSV (repeatable)");
  evalc->add_option("--kappa", kappa, "quadratic or linear")
      ->check(CLI::IsMember({"quadratic", "linear"}));
  evalc->add_flag("--detail", detail, "Add per-class and confusion tables");

  std::string group = "both";
  auto* comp = app.add_subcommand("complement", "Complementarity of detector errors");
  add_common(comp, common);
  comp->add_option("--matrix", matrix, "Prediction matrix CSV")->required();
  comp->add_option("--roster", roster, "Comma-separated detector names");
  comp->add_option("--group", group, "non-neutral, neutral or both")
      ->check(CLI::IsMember({"non-neutral", "neutral", "both"}));

  std::string tags;
  std::vector<std::string> detectors;
  auto* errs = app.add_subcommand("error-report", "Misclassification rate per error category");
  add_common(errs, common);
  errs->add_option("--matrix", matrix, "Prediction matrix CSV")->required();
  errs->add_option("--tags", tags, "CSV with id,category")->required();
  errs->add_option("--detector", detectors, "Detector column (repeatable)");

  std::vector<std::string> grid;
  auto* sweep = app.add_subcommand("sweep", "Grid search over stacker settings");
  add_common(sweep, common);
  sweep->add_option("--config", common.config, "Run configuration (JSON)")->required();
  sweep->add_option("--dataset", common.dataset, "Override the dataset path");
  sweep->add_option("--matrix", matrix, "Prediction matrix CSV");
  sweep->add_option("--folds", fold_file, "id,fold CSV (default: recomputed)");
  sweep->add_option("--grid", grid, "key=v1,v2 (repeatable)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*detect) return cmd_detect(common, out);
    if (*folds) return cmd_folds(common, k, k_opt->count() > 0, out);
    if (*vote) return cmd_vote(common, matrix, roster, tie_rule, out);
    if (*train) {
      return cmd_train_ensemble(common, matrix, fold_file, variant, bundle, explain,
                                no_bundle, out);
    }
    if (*predict) return cmd_predict(common, bundle, input, labels, explain, out);
    if (*evalc) return cmd_eval(common, matrix, predictions, kappa, detail, out);
    if (*comp) return cmd_complement(common, matrix, roster, group, out);
    if (*errs) return cmd_error_report(common, matrix, tags, detectors, out);
    if (*sweep) return cmd_sweep(common, matrix, fold_file, grid, out);
  } catch (const TieError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace sentisead::cli

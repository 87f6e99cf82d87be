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


#include "sentisead/eval.h"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include <nlohmann/json.hpp>

#include "sentisead/csv.h"
#include "sentisead/error.h"

namespace sentisead {

using nlohmann::json;

PredictionMatrix::PredictionMatrix(std::string dataset_name,
                                   std::string fold_fingerprint)
    : dataset_name_(std::move(dataset_name)),
      fold_fingerprint_(std::move(fold_fingerprint)) {}

PredictionMatrix PredictionMatrix::from_dataset(const Dataset& d,
                                                std::string fold_fingerprint) {
  PredictionMatrix pm(d.name(), std::move(fold_fingerprint));
  for (const Unit& u : d.units()) pm.add_row(u.id, u.gold);
  return pm;
}

std::optional<std::size_t> PredictionMatrix::find_detector(
    std::string_view name) const {
  for (std::size_t i = 0; i < detectors_.size(); ++i) {
    if (detectors_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t PredictionMatrix::detector_index(std::string_view name) const {
  if (auto i = find_detector(name)) return *i;
  std::string known;
  for (const std::string& d : detectors_) known += (known.empty() ? "" : ", ") + d;
  throw SchemaError("prediction matrix has no detector '" + std::string(name) +
                    "' (have: " + (known.empty() ? "none" : known) + ")");
}

std::optional<std::size_t> PredictionMatrix::find_row(std::string_view id) const {
  auto it = row_index_.find(std::string(id));
  if (it == row_index_.end()) return std::nullopt;
  return it->second;
}

void PredictionMatrix::add_row(std::string id, Polarity gold) {
  if (!detectors_.empty()) {
    throw LayoutError("prediction matrix: rows must be added before columns");
  }
  if (!row_index_.emplace(id, rows_.size()).second) {
    throw DuplicateError("prediction matrix: duplicate id '" + id + "'");
  }
  rows_.push_back(Row{std::move(id), gold, {}});
}

void PredictionMatrix::add_column(std::string name, std::vector<Polarity> labels,
                                  std::string kind) {
  if (find_detector(name)) {
    throw DuplicateError("prediction matrix: duplicate detector '" + name + "'");
  }
  if (labels.size() != rows_.size()) {
    throw CoverageError("detector '" + name + "' supplies " +
                        std::to_string(labels.size()) + " labels for " +
                        std::to_string(rows_.size()) + " units");
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) rows_[r].labels.push_back(labels[r]);
  detectors_.push_back(std::move(name));
  kinds_.push_back(std::move(kind));
}

std::vector<Polarity> PredictionMatrix::column(std::string_view name) const {
  const std::size_t c = detector_index(name);
  std::vector<Polarity> out;
  out.reserve(rows_.size());
  for (const Row& r : rows_) out.push_back(r.labels[c]);
  return out;
}

std::vector<Polarity> PredictionMatrix::gold() const {
  std::vector<Polarity> out;
  out.reserve(rows_.size());
  for (const Row& r : rows_) out.push_back(r.gold);
  return out;
}

std::vector<Polarity> PredictionMatrix::labels_for(
    std::size_t row, std::span<const std::string> roster) const {
  std::vector<Polarity> out;
  out.reserve(roster.size());
  for (const std::string& name : roster) {
    out.push_back(rows_.at(row).labels[detector_index(name)]);
  }
  return out;
}

PredictionMatrix PredictionMatrix::select(
    std::span<const std::string> roster) const {
  PredictionMatrix out(dataset_name_, fold_fingerprint_);
  for (const Row& r : rows_) out.add_row(r.id, r.gold);
  for (const std::string& name : roster) {
    out.add_column(name, column(name), kinds_[detector_index(name)]);
  }
  return out;
}

std::string PredictionMatrix::to_csv() const {
  std::vector<std::string> header = {"id", "gold"};
  header.insert(header.end(), detectors_.begin(), detectors_.end());
  std::string out = csv_line(header);
  for (const Row& r : rows_) {
    std::vector<std::string> fields = {r.id, std::string(to_string(r.gold))};
    for (Polarity p : r.labels) fields.emplace_back(to_string(p));
    out += csv_line(fields);
  }
  return out;
}

std::string PredictionMatrix::meta_json() const {
  json dets = json::array();
  for (std::size_t i = 0; i < detectors_.size(); ++i) {
    dets.push_back({{"name", detectors_[i]}, {"kind", kinds_[i]}});
  }
  json meta = {{"format_version", 1},
               {"dataset", dataset_name_},
               {"fold_fingerprint", fold_fingerprint_},
               {"detectors", dets}};
  return meta.dump(2) + "\n";
}

std::filesystem::path PredictionMatrix::sidecar_path(
    const std::filesystem::path& csv) {
  std::filesystem::path p = csv;
  p += ".meta.json";
  return p;
}

void PredictionMatrix::save(const std::filesystem::path& csv_path) const {
  write_file_atomic(csv_path, to_csv());
  write_file_atomic(sidecar_path(csv_path), meta_json());
}

PredictionMatrix PredictionMatrix::parse(std::string_view csv_text,
                                         std::string source) {
  CsvTable t = parse_csv(csv_text, std::move(source));
  const std::size_t id_col = t.column("id");
  const std::size_t gold_col = t.column("gold");
  PredictionMatrix pm;
  std::vector<std::size_t> det_cols;
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    if (c != id_col && c != gold_col) det_cols.push_back(c);
  }
  std::vector<std::vector<Polarity>> columns(det_cols.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    auto gold = parse_polarity(row[gold_col]);
    if (!gold) {
      throw LabelError(t.where(r) + ": unknown gold label '" + row[gold_col] +
                       "' for id '" + row[id_col] + "'");
    }
    if (pm.find_row(row[id_col])) {
      throw DuplicateError(t.where(r) + ": duplicate id '" + row[id_col] + "'");
    }
    pm.rows_.push_back(Row{row[id_col], *gold, {}});
    pm.row_index_.emplace(row[id_col], r);
    for (std::size_t k = 0; k < det_cols.size(); ++k) {
      const std::string& cell = row[det_cols[k]];
      if (trim(cell).empty()) {
        throw CoverageError(t.where(r) + ": detector '" + t.header[det_cols[k]] +
                            "' has no label for id '" + row[id_col] + "'");
      }
      auto label = parse_polarity(cell);
      if (!label) {
        throw LabelError(t.where(r) + ": unknown label '" + cell +
                         "' in column '" + t.header[det_cols[k]] + "'");
      }
      columns[k].push_back(*label);
    }
  }
  for (std::size_t k = 0; k < det_cols.size(); ++k) {
    pm.add_column(t.header[det_cols[k]], std::move(columns[k]));
  }
  return pm;
}

PredictionMatrix PredictionMatrix::load(const std::filesystem::path& csv_path) {
  PredictionMatrix pm = parse(read_text_file(csv_path), csv_path.string());
  const auto meta_path = sidecar_path(csv_path);
  if (!std::filesystem::exists(meta_path)) return pm;
  json meta;
  try {
    meta = json::parse(read_text_file(meta_path));
    pm.dataset_name_ = meta.value("dataset", "");
    pm.fold_fingerprint_ = meta.value("fold_fingerprint", "");
    if (meta.contains("detectors")) {
      for (const json& d : meta.at("detectors")) {
        auto i = pm.find_detector(d.at("name").get<std::string>());
        if (i) pm.kinds_[*i] = d.value("kind", "");
      }
    }
  } catch (const json::exception& e) {
    throw FormatError(meta_path.string() + ": " + e.what());
  }
  return pm;
}

namespace eval {

std::size_t report_index(Polarity p) {
  switch (p) {
    case Polarity::kPositive: return 0;
    case Polarity::kNegative: return 1;
    case Polarity::kNeutral: return 2;
  }
  return 2;
}

}  // namespace eval

void ConfusionMatrix::add(Polarity actual, Polarity predicted, std::size_t n) {
  counts[eval::report_index(actual)][eval::report_index(predicted)] += n;
}

std::size_t ConfusionMatrix::at(Polarity actual, Polarity predicted) const {
  return counts[eval::report_index(actual)][eval::report_index(predicted)];
}

std::size_t ConfusionMatrix::total() const {
  std::size_t t = 0;
  for (const auto& row : counts) {
    for (std::size_t c : row) t += c;
  }
  return t;
}

std::size_t ConfusionMatrix::support(Polarity actual) const {
  std::size_t t = 0;
  for (std::size_t c : counts[eval::report_index(actual)]) t += c;
  return t;
}

std::size_t ConfusionMatrix::predicted(Polarity label) const {
  std::size_t t = 0;
  for (const auto& row : counts) t += row[eval::report_index(label)];
  return t;
}

std::size_t ConfusionMatrix::trace() const {
  std::size_t t = 0;
  for (std::size_t i = 0; i < kNumClasses; ++i) t += counts[i][i];
  return t;
}

std::string_view to_string(PolarityGroup g) {
  return g == PolarityGroup::kNonNeutral ? "non-neutral" : "neutral";
}

bool in_group(Polarity gold, PolarityGroup g) {
  return (gold == Polarity::kNeutral) == (g == PolarityGroup::kNeutral);
}

std::string_view to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kContext: return "Context";
    case ErrorCategory::kPolarityDiversity: return "Polarity Diversity";
    case ErrorCategory::kDomain: return "Domain";
    case ErrorCategory::kGeneral: return "General";
    case ErrorCategory::kPoliteness: return "Politeness";
  }
  return "General";
}

ErrorCategory parse_error_category(std::string_view s) {
  const std::string t = to_lower(trim(s));
  for (ErrorCategory c : kErrorCategories) {
    if (to_lower(to_string(c)) == t) return c;
  }
  throw CategoryError("unknown error category '" + std::string(s) +
                      "' (Context, Polarity Diversity, Domain, General, "
                      "Politeness)");
}

namespace eval {

ConfusionMatrix confusion(std::span<const Polarity> gold,
                          std::span<const Polarity> predicted) {
  if (gold.size() != predicted.size()) {
    throw LayoutError("confusion: " + std::to_string(gold.size()) +
                      " gold labels but " + std::to_string(predicted.size()) +
                      " predictions");
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < gold.size(); ++i) cm.add(gold[i], predicted[i]);
  return cm;
}

ConfusionMatrix confusion(const PredictionMatrix& pm,
                          std::string_view detector) {
  const std::vector<Polarity> pred = pm.column(detector);
  const std::vector<Polarity> gold = pm.gold();
  return confusion(gold, pred);
}

namespace {

double ratio(std::size_t num, std::size_t den, const std::string& what,
             std::vector<std::string>& notes) {
  if (den == 0) {
    notes.push_back(what + " is 0/0, reported as 0");
    return 0.0;
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

double harmonic(double p, double r) {
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

std::optional<double> kappa_or_empty(const ConfusionMatrix& cm,
                                     KappaWeighting w) {
  try {
    return weighted_kappa(cm, w);
  } catch (const UndefinedKappaError&) {
    return std::nullopt;
  }
}

}  // namespace

EvalReport metrics(const ConfusionMatrix& cm, KappaWeighting weighting) {
  EvalReport r;
  r.total = cm.total();
  std::size_t tp_sum = 0, fp_sum = 0, fn_sum = 0;
  double p_sum = 0, r_sum = 0, f_sum = 0;
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    const Polarity label = kReportOrder[i];
    const std::size_t tp = cm.at(label, label);
    const std::size_t fp = cm.predicted(label) - tp;
    const std::size_t fn = cm.support(label) - tp;
    const std::string name(to_string(label));
    ClassMetrics& m = r.per_class[i];
    m.label = label;
    m.support = cm.support(label);
    m.precision = ratio(tp, tp + fp, "precision(" + name + ")", r.notes);
    m.recall = ratio(tp, tp + fn, "recall(" + name + ")", r.notes);
    m.f1 = harmonic(m.precision, m.recall);
    p_sum += m.precision;
    r_sum += m.recall;
    f_sum += m.f1;
    tp_sum += tp;
    fp_sum += fp;
    fn_sum += fn;
  }
  r.macro_precision = p_sum / kNumClasses;
  r.macro_recall = r_sum / kNumClasses;
  r.macro_f1 = f_sum / kNumClasses;
  r.micro_precision = ratio(tp_sum, tp_sum + fp_sum, "micro precision", r.notes);
  r.micro_recall = ratio(tp_sum, tp_sum + fn_sum, "micro recall", r.notes);
  r.micro_f1 = harmonic(r.micro_precision, r.micro_recall);
  r.kappa = kappa_or_empty(cm, weighting);
  return r;
}

double weighted_kappa(const ConfusionMatrix& cm, KappaWeighting weighting) {
  const double n = static_cast<double>(cm.total());
  if (n == 0) throw UndefinedKappaError("weighted kappa of an empty matrix");
  double observed = 0, expected = 0;
  for (std::size_t a = 0; a < kNumClasses; ++a) {
    for (std::size_t b = 0; b < kNumClasses; ++b) {
      const Polarity pa = class_at(a), pb = class_at(b);
      const double d = std::abs(ordinal(pa) - ordinal(pb)) /
                       static_cast<double>(kNumClasses - 1);
      const double w = weighting == KappaWeighting::kQuadratic ? d * d : d;
      observed += w * static_cast<double>(cm.at(pa, pb));
      expected += w * static_cast<double>(cm.support(pa)) *
                  static_cast<double>(cm.predicted(pb)) / n;
    }
  }
  if (expected == 0.0) {
    throw UndefinedKappaError(
        "weighted kappa is undefined: no expected disagreement");
  }
  return 1.0 - observed / expected;
}

double weighted_kappa(const PredictionMatrix& pm, std::string_view detector,
                      KappaWeighting weighting) {
  return weighted_kappa(confusion(pm, detector), weighting);
}

namespace {

std::optional<double> fraction(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::vector<ComplementarityRow> complementarity(const PredictionMatrix& pm,
                                                PolarityGroup group) {
  const std::size_t tools = pm.detectors().size();
  if (tools < 2) {
    throw SchemaError("complementarity needs at least 2 detectors, have " +
                      std::to_string(tools));
  }
  std::vector<ComplementarityRow> out;
  // One pass per analyzed row; tools.size() is the pooled row.
  for (std::size_t t = 0; t <= tools; ++t) {
    const bool pooled = t == tools;
    std::size_t wrong = 0, any = 0;
    std::vector<std::size_t> right(tools, 0);
    for (const auto& row : pm.rows()) {
      if (!in_group(row.gold, group)) continue;
      bool selected = false;
      if (pooled) {
        for (Polarity p : row.labels) selected = selected || p != row.gold;
      } else {
        selected = row.labels[t] != row.gold;
      }
      if (!selected) continue;
      ++wrong;
      bool someone = false;
      for (std::size_t u = 0; u < tools; ++u) {
        if (u == t || row.labels[u] != row.gold) continue;
        ++right[u];
        someone = true;
      }
      if (someone) ++any;
    }
    ComplementarityRow r;
    r.wrong_tool = pooled ? std::string() : pm.detectors()[t];
    r.group = group;
    r.wrong_count = wrong;
    r.corrected_by.resize(tools);
    for (std::size_t u = 0; u < tools; ++u) {
      if (u != t) r.corrected_by[u] = fraction(right[u], wrong);
    }
    r.at_least_one = fraction(any, wrong);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ErrorTag> parse_error_tags(std::string_view csv_text,
                                       std::string source) {
  CsvTable t = parse_csv(csv_text, std::move(source));
  const std::size_t id_col = t.column("id");
  const std::size_t cat_col = t.column("category");
  std::vector<ErrorTag> tags;
  tags.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    try {
      tags.push_back(ErrorTag{t.rows[r][id_col],
                              parse_error_category(t.rows[r][cat_col])});
    } catch (const CategoryError& e) {
      throw CategoryError(t.where(r) + ": " + e.what());
    }
  }
  return tags;
}

std::vector<ErrorTag> read_error_tags(const std::filesystem::path& path) {
  return parse_error_tags(read_text_file(path), path.string());
}

std::vector<CategoryCoverage> error_report(const PredictionMatrix& pm,
                                           std::string_view detector,
                                           std::span<const ErrorTag> tags) {
  const std::size_t col = pm.detector_index(detector);
  std::vector<CategoryCoverage> out;
  for (ErrorCategory c : kErrorCategories) out.push_back(CategoryCoverage{c, 0, 0, std::nullopt});
  for (const ErrorTag& tag : tags) {
    auto row = pm.find_row(tag.id);
    if (!row) {
      throw CoverageError("error tag references unknown id '" + tag.id + "'");
    }
    const auto& r = pm.rows()[*row];
    auto& cov = out[static_cast<std::size_t>(tag.category)];
    ++cov.tagged;
    if (r.labels[col] != r.gold) ++cov.misclassified;
  }
  for (auto& cov : out) cov.fraction = fraction(cov.misclassified, cov.tagged);
  return out;
}

}  // namespace eval
}  // namespace sentisead

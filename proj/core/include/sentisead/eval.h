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


#ifndef SENTISEAD_EVAL_H_
#define SENTISEAD_EVAL_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sentisead/corpus.h"
#include "sentisead/polarity.h"

namespace sentisead {

// Per-unit gold label plus one label column per detector.
//
// On disk: CSV `id,gold,<detector>...` and a sidecar `<file>.meta.json`
// holding the dataset name, the fold fingerprint and detector kinds.
class PredictionMatrix {
 public:
  struct Row {
    std::string id;
    Polarity gold = Polarity::kNeutral;
    std::vector<Polarity> labels;  // one per detector column
  };

  PredictionMatrix() = default;
  PredictionMatrix(std::string dataset_name, std::string fold_fingerprint);

  // Rows with the gold labels of `d`, no detector columns.
  static PredictionMatrix from_dataset(const Dataset& d,
                                       std::string fold_fingerprint);

  const std::string& dataset_name() const { return dataset_name_; }
  const std::string& fold_fingerprint() const { return fold_fingerprint_; }
  void set_fold_fingerprint(std::string fp) { fold_fingerprint_ = std::move(fp); }

  std::span<const std::string> detectors() const { return detectors_; }
  // Free-form kind per detector ("dso", "bow", ...), empty when unknown.
  std::span<const std::string> detector_kinds() const { return kinds_; }
  std::span<const Row> rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  std::optional<std::size_t> find_detector(std::string_view name) const;
  // Throws SchemaError naming the detector when absent.
  std::size_t detector_index(std::string_view name) const;
  std::optional<std::size_t> find_row(std::string_view id) const;

  void add_row(std::string id, Polarity gold);
  // Appends a detector column; labels are in row order. Throws
  // DuplicateError for a repeated name and CoverageError on a size mismatch.
  void add_column(std::string name, std::vector<Polarity> labels,
                  std::string kind = {});
  std::vector<Polarity> column(std::string_view name) const;
  std::vector<Polarity> gold() const;
  // Labels for row `row` in `roster` order.
  std::vector<Polarity> labels_for(std::size_t row,
                                   std::span<const std::string> roster) const;

  // Keeps only the named columns, in the given order.
  PredictionMatrix select(std::span<const std::string> roster) const;

  std::string to_csv() const;
  std::string meta_json() const;
  // Writes the CSV and its sidecar.
  void save(const std::filesystem::path& csv_path) const;
  // Loads the CSV and, when present, its sidecar. Every cell must hold a
  // label; gaps raise CoverageError naming the row.
  static PredictionMatrix load(const std::filesystem::path& csv_path);
  static PredictionMatrix parse(std::string_view csv_text,
                                std::string source = "<memory>");

  static std::filesystem::path sidecar_path(const std::filesystem::path& csv);

 private:
  std::string dataset_name_;
  std::string fold_fingerprint_;
  std::vector<std::string> detectors_;
  std::vector<std::string> kinds_;
  std::vector<Row> rows_;
  std::unordered_map<std::string, std::size_t> row_index_;
};

namespace eval {

// Display order of confusion matrices and reports: positive, negative,
// neutral.
inline constexpr std::array<Polarity, kNumClasses> kReportOrder = {
    Polarity::kPositive, Polarity::kNegative, Polarity::kNeutral};
std::size_t report_index(Polarity p);

}  // namespace eval

// counts[actual][predicted], both in eval::kReportOrder.
struct ConfusionMatrix {
  std::array<std::array<std::size_t, kNumClasses>, kNumClasses> counts{};

  void add(Polarity actual, Polarity predicted, std::size_t n = 1);
  std::size_t at(Polarity actual, Polarity predicted) const;
  std::size_t total() const;
  std::size_t support(Polarity actual) const;    // row sum
  std::size_t predicted(Polarity label) const;  // column sum
  std::size_t trace() const;

  friend bool operator==(const ConfusionMatrix&,
                         const ConfusionMatrix&) = default;
};

struct ClassMetrics {
  Polarity label = Polarity::kNeutral;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

enum class KappaWeighting { kQuadratic, kLinear };

struct EvalReport {
  std::array<ClassMetrics, kNumClasses> per_class;  // eval::kReportOrder
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double micro_precision = 0.0;
  double micro_recall = 0.0;
  double micro_f1 = 0.0;
  // Empty when undefined (no expected disagreement).
  std::optional<double> kappa;
  std::size_t total = 0;
  // One entry per 0/0 ratio that was reported as 0.
  std::vector<std::string> notes;
};

enum class PolarityGroup { kNonNeutral, kNeutral };

std::string_view to_string(PolarityGroup g);
bool in_group(Polarity gold, PolarityGroup g);

struct ComplementarityRow {
  // Tool whose misclassifications the row analyzes; empty for the pooled
  // row over units that at least one tool got wrong.
  std::string wrong_tool;
  PolarityGroup group = PolarityGroup::kNonNeutral;
  std::size_t wrong_count = 0;
  // Fraction of the row's units each tool labels correctly, in matrix
  // column order. Empty for the row's own tool and when wrong_count is 0.
  std::vector<std::optional<double>> corrected_by;
  // Fraction corrected by at least one other tool (any tool for the pooled
  // row).
  std::optional<double> at_least_one;

  bool pooled() const { return wrong_tool.empty(); }
};

enum class ErrorCategory {
  kContext,
  kPolarityDiversity,
  kDomain,
  kGeneral,
  kPoliteness,
};

inline constexpr std::array<ErrorCategory, 5> kErrorCategories = {
    ErrorCategory::kContext, ErrorCategory::kPolarityDiversity,
    ErrorCategory::kDomain, ErrorCategory::kGeneral,
    ErrorCategory::kPoliteness};

std::string_view to_string(ErrorCategory c);
// Case-insensitive; throws CategoryError for anything else.
ErrorCategory parse_error_category(std::string_view s);

struct ErrorTag {
  std::string id;
  ErrorCategory category;
};

struct CategoryCoverage {
  ErrorCategory category;
  std::size_t tagged = 0;
  std::size_t misclassified = 0;
  std::optional<double> fraction;  // empty when nothing is tagged
};

namespace eval {

ConfusionMatrix confusion(const PredictionMatrix& pm,
                          std::string_view detector);
ConfusionMatrix confusion(std::span<const Polarity> gold,
                          std::span<const Polarity> predicted);

// Per-class P = TP/(TP+FP), R = TP/(TP+FN), F1 their harmonic mean, with
// 0/0 taken as 0. Macro averages are unweighted over the three classes,
// micro averages pool TP/FP/FN.
EvalReport metrics(const ConfusionMatrix& cm,
                   KappaWeighting weighting = KappaWeighting::kQuadratic);

// kappa = 1 - sum(w * O) / sum(w * E) over the ordinal encoding -1/0/+1,
// w_ij = (i - j)^2 / (k - 1)^2 (quadratic) or |i - j| / (k - 1) (linear),
// E the outer product of the marginals over N. Throws UndefinedKappaError
// when the expected disagreement is zero or the matrix is empty.
double weighted_kappa(const ConfusionMatrix& cm,
                      KappaWeighting weighting = KappaWeighting::kQuadratic);
double weighted_kappa(const PredictionMatrix& pm, std::string_view detector,
                      KappaWeighting weighting = KappaWeighting::kQuadratic);

// One row per detector plus the pooled row, for units whose gold label
// falls in `group`. Throws SchemaError with fewer than two detectors.
std::vector<ComplementarityRow> complementarity(const PredictionMatrix& pm,
                                                PolarityGroup group);

// CSV `id,category`.
std::vector<ErrorTag> read_error_tags(const std::filesystem::path& path);
std::vector<ErrorTag> parse_error_tags(std::string_view csv_text,
                                       std::string source = "<memory>");

// Coverage for every category, in kErrorCategories order. Throws
// CoverageError when a tag names an id absent from the matrix.
std::vector<CategoryCoverage> error_report(const PredictionMatrix& pm,
                                           std::string_view detector,
                                           std::span<const ErrorTag> tags);

}  // namespace eval
}  // namespace sentisead

#endif  // SENTISEAD_EVAL_H_

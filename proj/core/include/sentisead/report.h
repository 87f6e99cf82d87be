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


#ifndef SENTISEAD_REPORT_H_
#define SENTISEAD_REPORT_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentisead/eval.h"

namespace sentisead::report {

enum class Format { kCsv, kMarkdown };

Format parse_format(std::string_view s);

// Generic table; markdown output pads columns to equal width.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render(Format format) const;
};

struct NamedReport {
  std::string name;
  EvalReport report;
};

// Columns: detector, macro P/R/F1, micro F1, kappa, n.
Table performance_table(std::span<const NamedReport> reports);
// Per-class precision/recall/F1 per report.
Table per_class_table(std::span<const NamedReport> reports);
// Absolute counts in positive/negative/neutral order.
Table confusion_table(const ConfusionMatrix& cm);
// Percentages rendered as whole percent in markdown, raw fractions in CSV.
Table complementarity_table(std::span<const ComplementarityRow> rows,
                            std::span<const std::string> tools,
                            Format format);
Table error_report_table(std::string_view detector,
                         std::span<const CategoryCoverage> coverage,
                         Format format);

std::string percent(double fraction);
std::string fixed(double value, int digits = 3);

}  // namespace sentisead::report

#endif  // SENTISEAD_REPORT_H_

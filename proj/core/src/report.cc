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


#include "sentisead/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "sentisead/csv.h"
#include "sentisead/error.h"

namespace sentisead::report {

Format parse_format(std::string_view s) {
  const std::string t = to_lower(trim(s));
  if (t == "csv") return Format::kCsv;
  if (t == "md" || t == "markdown") return Format::kMarkdown;
  throw ConfigError("unknown format '" + std::string(s) + "' (csv, md)");
}

std::string percent(double fraction) {
  return std::to_string(static_cast<long long>(std::lround(fraction * 100.0))) +
         "%";
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string Table::render(Format format) const {
  if (format == Format::kCsv) {
    std::string out = csv_line(header);
    for (const auto& row : rows) out += csv_line(row);
    return out;
  }
  std::vector<std::size_t> width(header.size(), 3);
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = std::max(width[c], header[c].size());
    for (const auto& row : rows) width[c] = std::max(width[c], row.at(c).size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s = "|";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += " " + cells[c] + std::string(width[c] - cells[c].size(), ' ') + " |";
    }
    return s + "\n";
  };
  std::string out = line(header);
  out += "|";
  for (std::size_t w : width) out += std::string(w + 2, '-') + "|";
  out += "\n";
  for (const auto& row : rows) out += line(row);
  return out;
}

Table performance_table(std::span<const NamedReport> reports) {
  Table t;
  t.header = {"detector", "macro_p", "macro_r", "macro_f1",
              "micro_f1", "kappa", "n"};
  for (const NamedReport& r : reports) {
    const EvalReport& e = r.report;
    t.rows.push_back({r.name, fixed(e.macro_precision), fixed(e.macro_recall),
                      fixed(e.macro_f1), fixed(e.micro_f1),
                      e.kappa ? fixed(*e.kappa) : "n/a",
                      std::to_string(e.total)});
  }
  return t;
}

Table per_class_table(std::span<const NamedReport> reports) {
  Table t;
  t.header = {"detector", "class", "precision", "recall", "f1", "support"};
  for (const NamedReport& r : reports) {
    for (const ClassMetrics& m : r.report.per_class) {
      t.rows.push_back({r.name, std::string(to_string(m.label)),
                        fixed(m.precision), fixed(m.recall), fixed(m.f1),
                        std::to_string(m.support)});
    }
  }
  return t;
}

Table confusion_table(const ConfusionMatrix& cm) {
  Table t;
  t.header = {"actual \\ predicted"};
  for (Polarity p : eval::kReportOrder) t.header.emplace_back(to_string(p));
  for (Polarity a : eval::kReportOrder) {
    std::vector<std::string> row = {std::string(to_string(a))};
    for (Polarity p : eval::kReportOrder) row.push_back(std::to_string(cm.at(a, p)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

std::string cell(const std::optional<double>& v, Format format) {
  if (!v) return format == Format::kCsv ? "" : "n/a";
  return format == Format::kCsv ? format_double(*v) : percent(*v);
}

}  // namespace

Table complementarity_table(std::span<const ComplementarityRow> rows,
                            std::span<const std::string> tools,
                            Format format) {
  Table t;
  t.header = {"wrong_tool", "group", "wrong"};
  t.header.insert(t.header.end(), tools.begin(), tools.end());
  t.header.push_back(">=1");
  for (const ComplementarityRow& r : rows) {
    if (r.corrected_by.size() != tools.size()) {
      throw LayoutError("complementarity row has " +
                        std::to_string(r.corrected_by.size()) +
                        " tool columns, table has " +
                        std::to_string(tools.size()));
    }
    std::vector<std::string> row = {r.pooled() ? ">=1 tool" : r.wrong_tool,
                                    std::string(to_string(r.group)),
                                    std::to_string(r.wrong_count)};
    for (std::size_t u = 0; u < tools.size(); ++u) {
      if (!r.pooled() && tools[u] == r.wrong_tool) {
        row.push_back(format == Format::kCsv ? "" : "-");
      } else {
        row.push_back(cell(r.corrected_by[u], format));
      }
    }
    row.push_back(cell(r.at_least_one, format));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table error_report_table(std::string_view detector,
                         std::span<const CategoryCoverage> coverage,
                         Format format) {
  Table t;
  t.header = {"detector", "category", "tagged", "misclassified", "fraction"};
  for (const CategoryCoverage& c : coverage) {
    t.rows.push_back({std::string(detector), std::string(to_string(c.category)),
                      std::to_string(c.tagged), std::to_string(c.misclassified),
                      cell(c.fraction, format)});
  }
  return t;
}

}  // namespace sentisead::report

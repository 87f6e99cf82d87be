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


#include <gtest/gtest.h>

#include "sentisead/error.h"
#include "sentisead/report.h"

namespace sentisead::report {
namespace {

TEST(FormatTest, Parse) {
  EXPECT_EQ(parse_format("csv"), Format::kCsv);
  EXPECT_EQ(parse_format("md"), Format::kMarkdown);
  EXPECT_EQ(parse_format("markdown"), Format::kMarkdown);
  EXPECT_THROW(parse_format("html"), ConfigError);
}

TEST(NumberTest, PercentAndFixed) {
  EXPECT_EQ(percent(0.24), "24%");
  EXPECT_EQ(percent(0.245), "25%");
  EXPECT_EQ(percent(1.0), "100%");
  EXPECT_EQ(fixed(0.78749), "0.787");
  EXPECT_EQ(fixed(0.5, 1), "0.5");
}

TEST(TableTest, AlignedMarkdownAndCsv) {
  Table t{{"a", "long header"}, {{"x,y", "1"}, {"zzzzz", "22"}}};
  EXPECT_EQ(t.render(Format::kMarkdown),
            "| a     | long header |\n"
            "|-------|-------------|\n"
            "| x,y   | 1           |\n"
            "| zzzzz | 22          |\n");
  EXPECT_EQ(t.render(Format::kCsv), "a,long header\n\"x,y\",1\nzzzzz,22\n");
}

TEST(PerformanceTableTest, OneRowPerReport) {
  EvalReport r;
  r.macro_precision = 0.81;
  r.macro_recall = 0.79;
  r.macro_f1 = 0.787;
  r.micro_f1 = 0.8;
  r.total = 12;
  NamedReport named[] = {{"sentisead", r}};
  Table t = performance_table(named);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][0], "sentisead");
  EXPECT_EQ(t.rows[0][3], "0.787");
  EXPECT_EQ(t.rows[0][5], "n/a");
  EXPECT_EQ(t.rows[0][6], "12");
}

TEST(ComplementarityTableTest, PercentInMarkdownRawInCsv) {
  ComplementarityRow a;
  a.wrong_tool = "A";
  a.wrong_count = 2;
  a.corrected_by = {std::nullopt, 0.5};
  a.at_least_one = 0.5;
  ComplementarityRow pooled;
  pooled.wrong_count = 0;
  pooled.corrected_by = {std::nullopt, std::nullopt};
  const std::string tools[] = {"A", "B"};
  ComplementarityRow rows[] = {a, pooled};
  Table md = complementarity_table(rows, tools, Format::kMarkdown);
  EXPECT_EQ(md.header, (std::vector<std::string>{"wrong_tool", "group", "wrong", "A", "B", ">=1"}));
  EXPECT_EQ(md.rows[0], (std::vector<std::string>{"A", "non-neutral", "2", "-", "50%", "50%"}));
  EXPECT_EQ(md.rows[1][0], ">=1 tool");
  EXPECT_EQ(md.rows[1][5], "n/a");
  Table csv = complementarity_table(rows, tools, Format::kCsv);
  EXPECT_EQ(csv.rows[0], (std::vector<std::string>{"A", "non-neutral", "2", "", "0.5", "0.5"}));
  EXPECT_EQ(csv.rows[1][5], "");
}

TEST(ConfusionTableTest, ReportOrder) {
  ConfusionMatrix cm;
  cm.add(Polarity::kPositive, Polarity::kNeutral, 3);
  Table t = confusion_table(cm);
  EXPECT_EQ(t.header[1], "positive");
  EXPECT_EQ(t.header[3], "neutral");
  EXPECT_EQ(t.rows[0][3], "3");
}

}  // namespace
}  // namespace sentisead::report

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

#include <fstream>
#include <sstream>

#include "commands.h"
#include "fixtures.h"
#include "sentisead/csv.h"

namespace sentisead::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

const char* kTenUnits =
    "id,text,label\n"
    "t01,The performance is terrible,negative\n"
    "t02,I like this tool,positive\n"
    "t03,Thanks for the quick fix,positive\n"
    "t04,The build crashes on startup,negative\n"
    "t05,Where is the config file?,neutral\n"
    "t06,Great library and clear docs,positive\n"
    "t07,This is not good,negative\n"
    "t08,Version 2 was released,neutral\n"
    "t09,The docs are confusing,negative\n"
    "t10,Run the tests again,neutral\n";

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fixtures::scratch(::testing::UnitTest::GetInstance()->current_test_info()->name());
    write(dir_ / "units.csv", kTenUnits);
    write(dir_ / "rules.json",
          R"({"dataset": "units.csv", "folds": {"k": 2},
              "roster": [{"kind": "dso"}, {"kind": "valence"}, {"kind": "pattern"}],
              "ensemble": {"variant": "N", "learner": {"n_trees": 5}}})");
  }
  fs::path dir_;
};

TEST_F(CliTest, DetectWritesThreeColumnMatrix) {
  const auto matrix = dir_ / "m.csv";
  Result r = run_cli({"detect", "--config", (dir_ / "rules.json").string(), "--out",
                      matrix.string(), "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  CsvTable t = read_csv(matrix);
  EXPECT_EQ(t.header, (std::vector<std::string>{"id", "gold", "dso", "valence", "pattern"}));
  EXPECT_EQ(t.rows.size(), 10u);
  EXPECT_TRUE(fs::exists(matrix.string() + ".meta.json"));
  EXPECT_NE(r.out.find("detector,macro_p"), std::string::npos);
}

TEST_F(CliTest, MissingLexiconFailsValidation) {
  write(dir_ / "bad.json",
        R"({"dataset": "units.csv", "roster": [{"kind": "dso", "lexicon": "nope.tsv"}]})");
  Result r = run_cli({"detect", "--config", (dir_ / "bad.json").string(), "--out",
                      (dir_ / "m.csv").string()});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("nope.tsv"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(dir_ / "m.csv"));
}

TEST_F(CliTest, ErrorsNameTheFlagOrRow) {
  Result unknown =
      run_cli({"detect", "--config", (dir_ / "rules.json").string(), "--bogus"});
  EXPECT_NE(unknown.code, 0);
  EXPECT_NE(unknown.err.find("--bogus"), std::string::npos) << unknown.err;
  write(dir_ / "broken.csv", "id,text,label\na,x,positive\nb,y,meh\n");
  Result bad = run_cli({"folds", "--dataset", (dir_ / "broken.csv").string(), "--k", "2"});
  EXPECT_NE(bad.code, 0);
  EXPECT_NE(bad.err.find("broken.csv:3"), std::string::npos) << bad.err;
}

TEST_F(CliTest, FoldsEmitsIdFoldCsv) {
  Result r = run_cli({"folds", "--dataset", (dir_ / "units.csv").string(), "--k", "3",
                      "--seed", "45"});
  ASSERT_EQ(r.code, 0) << r.err;
  CsvTable t = parse_csv(r.out, "stdout");
  EXPECT_EQ(t.header, (std::vector<std::string>{"id", "fold"}));
  EXPECT_EQ(t.rows.size(), 10u);
  EXPECT_EQ(run_cli({"folds", "--dataset", (dir_ / "units.csv").string(), "--k", "3",
                     "--seed", "45"})
                .out,
            r.out);
}

TEST_F(CliTest, TrainPredictEvalRoundTrip) {
  const auto matrix = dir_ / "m.csv";
  const auto config = (dir_ / "rules.json").string();
  ASSERT_EQ(run_cli({"detect", "--config", config, "--out", matrix.string()}).code, 0);
  const auto preds = dir_ / "ens" / "p.csv";
  Result train = run_cli({"train-ensemble", "--config", config, "--matrix", matrix.string(),
                          "--out", preds.string(), "--explain"});
  ASSERT_EQ(train.code, 0) << train.err;
  EXPECT_NE(train.out.find("sentisead-N"), std::string::npos);
  CsvTable p = read_csv(preds);
  EXPECT_EQ(p.header,
            (std::vector<std::string>{"id", "gold", "predicted", "dso", "valence", "pattern"}));
  ASSERT_TRUE(fs::exists(dir_ / "ens" / "sentisead_bundle.json"));

  CsvTable m = read_csv(matrix);
  std::string labels = "id,dso,valence,pattern\n";
  std::string input = "id,text\n";
  for (const auto& row : m.rows) {
    labels += csv_line({row[0], row[2], row[3], row[4]});
  }
  input += "t01,The performance is terrible\nt02,I like this tool\n";
  write(dir_ / "labels.csv", labels);
  write(dir_ / "input.csv", input);
  Result pred = run_cli({"predict", "--bundle", (dir_ / "ens" / "sentisead_bundle.json").string(),
                         "--input", (dir_ / "input.csv").string(), "--labels",
                         (dir_ / "labels.csv").string()});
  ASSERT_EQ(pred.code, 0) << pred.err;
  CsvTable out = parse_csv(pred.out, "stdout");
  EXPECT_EQ(out.header, (std::vector<std::string>{"id", "predicted"}));
  EXPECT_EQ(out.rows.size(), 2u);

  Result ev = run_cli({"eval", "--matrix", matrix.string(), "--predictions", preds.string()});
  ASSERT_EQ(ev.code, 0) << ev.err;
  EXPECT_NE(ev.out.find("| detector"), std::string::npos);
  EXPECT_NE(ev.out.find("| p "), std::string::npos) << ev.out;
  EXPECT_NE(ev.out.find("macro_f1"), std::string::npos);
}

TEST_F(CliTest, VoteAndComplement) {
  const auto matrix = dir_ / "m.csv";
  ASSERT_EQ(run_cli({"detect", "--config", (dir_ / "rules.json").string(), "--out",
                     matrix.string()})
                .code,
            0);
  Result vote = run_cli({"vote", "--matrix", matrix.string(), "--tie-rule", "priority-order"});
  ASSERT_EQ(vote.code, 0) << vote.err;
  EXPECT_EQ(parse_csv(vote.out, "stdout").rows.size(), 10u);
  Result comp = run_cli({"complement", "--matrix", matrix.string(), "--group", "both"});
  ASSERT_EQ(comp.code, 0) << comp.err;
  EXPECT_NE(comp.out.find(">=1 tool"), std::string::npos);
  Result one = run_cli({"complement", "--matrix", matrix.string(), "--roster", "dso"});
  EXPECT_NE(one.code, 0);
}

TEST_F(CliTest, DetectAndTrainAreByteIdenticalAcrossRuns) {
  const auto config = (dir_ / "rules.json").string();
  std::string first;
  for (int pass = 0; pass < 2; ++pass) {
    const auto sub = dir_ / ("run" + std::to_string(pass));
    ASSERT_EQ(run_cli({"detect", "--config", config, "--out", (sub / "m.csv").string()}).code, 0);
    ASSERT_EQ(run_cli({"train-ensemble", "--config", config, "--matrix", (sub / "m.csv").string(),
                       "--out", (sub / "p.csv").string()})
                  .code,
              0);
    const std::string bytes = slurp(sub / "m.csv") + slurp(sub / "p.csv");
    if (pass == 0) first = bytes;
    else EXPECT_EQ(bytes, first);
  }
}

}  // namespace
}  // namespace sentisead::cli

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

#include <memory>

#include "sentisead/detectors.h"
#include "sentisead/error.h"
#include "sentisead/textprep.h"

namespace sentisead {
namespace {

using detectors::dso_classify;
using detectors::pattern_classify;
using detectors::valence_classify;

constexpr Polarity kPos = Polarity::kPositive;
constexpr Polarity kNeg = Polarity::kNegative;
constexpr Polarity kNeu = Polarity::kNeutral;

const std::shared_ptr<const TextResources>& resources() {
  static auto res = TextResources::load_default();
  return res;
}

SentimentLexicon bundled_lexicon(const char* file, LexiconMode mode) {
  return SentimentLexicon::load(TextResources::default_dir() / file, mode);
}

TEST(LexiconTest, ModeBoundsAreEnforced) {
  EXPECT_THROW(SentimentLexicon::parse("good\t2\n", LexiconMode::kDso), FormatError);
  EXPECT_THROW(SentimentLexicon::parse("good\t1\n", LexiconMode::kValence), FormatError);
  EXPECT_THROW(SentimentLexicon::parse("good\t6\n", LexiconMode::kValence), FormatError);
  EXPECT_THROW(SentimentLexicon::parse("good\t0\n", LexiconMode::kDso), FormatError);
  SentimentLexicon lex = SentimentLexicon::parse("# c\nGood\t1\nbad\t-1\n", LexiconMode::kDso);
  EXPECT_EQ(lex.score("good"), 1);
  EXPECT_EQ(lex.words(), (std::vector<std::string>{"bad", "good"}));
}

TEST(DsoTest, WorkedExamples) {
  const SentimentLexicon lex = bundled_lexicon("dso_lexicon.tsv", LexiconMode::kDso);
  EXPECT_EQ(dso_classify("I also would like to see an answer", lex), kPos);
  EXPECT_EQ(dso_classify("", lex), kNeu);
  SentimentLexicon good = SentimentLexicon::parse("good\t1\n", LexiconMode::kDso);
  EXPECT_EQ(dso_classify("not good", good, 3), kNeg);
  EXPECT_EQ(dso_classify("good", good, 3), kPos);
}

TEST(DsoTest, NegationWindowBoundary) {
  SentimentLexicon good = SentimentLexicon::parse("good\t1\n", LexiconMode::kDso);
  // Three tokens between the negation and the match: outside a window of 3.
  EXPECT_EQ(dso_classify("not a b c good", good, 3), kPos);
  EXPECT_EQ(dso_classify("not a b good", good, 3), kNeg);
  EXPECT_EQ(dso_classify("isn't good", good, 1), kNeg);
  EXPECT_EQ(dso_classify("not good", good, 0), kPos);
}

TEST(DsoTest, CaseAndAppendedTextInvariance) {
  const SentimentLexicon lex = bundled_lexicon("dso_lexicon.tsv", LexiconMode::kDso);
  for (const char* t : {"This is good", "not good at all", "bad bad good", "nothing"}) {
    std::string upper = t;
    for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    EXPECT_EQ(dso_classify(t, lex), dso_classify(upper, lex)) << t;
    EXPECT_EQ(dso_classify(t, lex), dso_classify(std::string(t) + " zzq qqz", lex)) << t;
  }
}

TEST(ValenceTest, WorkedExamples) {
  SentimentLexicon lex = SentimentLexicon::parse("great\t3\nterrible\t-4\n",
                                                 LexiconMode::kValence);
  EXPECT_EQ(valence_classify("great but terrible", lex), kNeg);
  EXPECT_EQ(valence_classify("a plain sentence", lex), kNeu);
  EXPECT_EQ(valence_classify("great great", lex), kPos);
  EXPECT_EQ(valence_classify("GREAT", lex), kPos);
}

TEST(PatternTest, FiresOnOrderedGap) {
  auto rules = parse_pattern_rules(
      "perf\tperformance\tterrible\t3\taspect-then-cue\tnegative\n");
  EXPECT_EQ(pattern_classify("performance is terrible", rules), kNeg);
  EXPECT_EQ(pattern_classify("terrible performance", rules), kNeu);
  EXPECT_EQ(pattern_classify("performance a b c terrible", rules), kNeg);
  EXPECT_EQ(pattern_classify("performance a b c d terrible", rules), kNeu);
  EXPECT_EQ(pattern_classify("anything at all", std::vector<PatternRule>{}), kNeu);
}

TEST(PatternTest, FirstRuleInFileOrderWins) {
  auto rules = parse_pattern_rules(
      "a\tapi\tbad\t5\teither\tnegative\n"
      "b\tapi\tgood\t5\teither\tpositive\n");
  auto m = detectors::pattern_match("good api but bad", rules);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->rule, 0u);
  EXPECT_EQ(pattern_classify("good api but bad", rules), kNeg);
}

TEST(PatternTest, NonNeutralOnlyWhenTraced) {
  const auto rules = load_pattern_rules(TextResources::default_dir() / "pattern_rules.tsv");
  const char* texts[] = {"The performance is terrible after the update",
                         "I also would like to see an answer",
                         "docs are great", "Thanks Arvind", "the build crashes",
                         "Great library, the documentation is clear"};
  for (const char* t : texts) {
    const auto m = detectors::pattern_match(t, rules);
    const Polarity p = pattern_classify(t, rules);
    EXPECT_EQ(p != kNeu, m.has_value()) << t;
    if (m) EXPECT_EQ(p, rules[m->rule].label) << t;
  }
  EXPECT_THROW(parse_pattern_rules("x\ta\tb\t1\teither\tneutral\n"), FormatError);
  EXPECT_THROW(parse_pattern_rules("x\ta\tb\t-1\teither\tpositive\n"), FormatError);
}

std::vector<Unit> toy_corpus() {
  std::vector<Unit> units;
  for (int i = 0; i < 10; ++i) {
    units.push_back({"g" + std::to_string(i), "good", kPos});
    units.push_back({"b" + std::to_string(i), "bad", kNeg});
    units.push_back({"n" + std::to_string(i), "the box", kNeu});
  }
  return units;
}

TEST(BowTest, SeparableToyCorpus) {
  BowConfig cfg;
  cfg.learner.n_trees = 25;
  auto bow = detectors::bow_train(toy_corpus(), cfg, resources());
  EXPECT_EQ(bow->classify({"q", "good stuff", kNeu}), kPos);
  EXPECT_EQ(bow->classify({"q", "bad stuff", kNeu}), kNeg);
  EXPECT_EQ(bow->classify({"q", "the box", kNeu}), kNeu);
  EXPECT_EQ(bow->vocabulary().fitted_on(), "train");
  EXPECT_TRUE(bow->vocabulary().contains("good"));
}

TEST(BowTest, OutOfVocabularyFallsBackToMajority) {
  auto units = toy_corpus();
  for (int i = 0; i < 5; ++i) units.push_back({"x" + std::to_string(i), "bad", kNeg});
  BowConfig cfg;
  cfg.learner.n_trees = 10;
  auto bow = detectors::bow_train(units, cfg, resources());
  EXPECT_EQ(bow->majority(), kNeg);
  EXPECT_EQ(bow->classify({"q", "zebra quantum", kNeu}), kNeg);
}

TEST(BowTest, SingleClassIsATrainingError) {
  std::vector<Unit> units;
  for (int i = 0; i < 6; ++i) units.push_back({"n" + std::to_string(i), "the box", kNeu});
  EXPECT_THROW(detectors::bow_train(units, BowConfig{}, resources()), TrainingError);
  EXPECT_THROW(detectors::bow_train(std::vector<Unit>{}, BowConfig{}, resources()),
               TrainingError);
}

TEST(ExternalTest, AnswersFromMappingOnly) {
  auto ext = detectors::external_parse("id,label\nu1,positive\nu3,-1\n", "ext");
  EXPECT_EQ(ext->classify({"u1", "", kNeu}), kPos);
  EXPECT_EQ(ext->classify({"u3", "", kNeu}), kNeg);
  EXPECT_TRUE(ext->covers("u1"));
  EXPECT_FALSE(ext->covers("u2"));
  EXPECT_THROW(ext->classify({"u2", "", kNeu}), CoverageError);
  EXPECT_THROW(detectors::external_parse("id,label\nu1,maybe\n", "ext"), LabelError);
  EXPECT_THROW(detectors::external_parse("id,label\nu1,1\nu1,0\n", "ext"), DuplicateError);
}

TEST(DetectorKindTest, RoundTrip) {
  for (auto k : {DetectorKind::kDso, DetectorKind::kValence, DetectorKind::kPattern,
                 DetectorKind::kBow, DetectorKind::kExternal}) {
    EXPECT_EQ(parse_detector_kind(to_string(k)), k);
  }
  EXPECT_TRUE(is_rule_based(DetectorKind::kPattern));
  EXPECT_FALSE(is_rule_based(DetectorKind::kBow));
  EXPECT_THROW(parse_detector_kind("sarcasm-net"), ConfigError);
}

}  // namespace
}  // namespace sentisead

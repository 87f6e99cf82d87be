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

#include <cmath>
#include <map>

#include "oracles.h"
#include "sentisead/detectors.h"
#include "sentisead/error.h"
#include "sentisead/features.h"
#include "sentisead/rng.h"
#include "sentisead/textprep.h"
#include "sentisead/vocabulary.h"

namespace sentisead {
namespace {

using textprep::preprocess;

constexpr Polarity kPos = Polarity::kPositive;
constexpr Polarity kNeg = Polarity::kNegative;
constexpr Polarity kNeu = Polarity::kNeutral;

std::shared_ptr<const TextResources> resources() {
  static auto res = TextResources::load_default();
  return res;
}

std::shared_ptr<const ValenceDetector> valence() {
  static auto det = std::make_shared<const ValenceDetector>(
      "valence", std::make_shared<const SentimentLexicon>(SentimentLexicon::load(
                     TextResources::default_dir() / "valence_lexicon.tsv",
                     LexiconMode::kValence)));
  return det;
}

TEST(EntropyTest, ClosedForms) {
  const std::size_t two[] = {1, 1};
  const std::size_t skew[] = {1, 2};
  const std::size_t one[] = {3};
  EXPECT_NEAR(features::shannon_entropy(two), std::log(2.0), 1e-12);
  EXPECT_NEAR(features::shannon_entropy(skew),
              -(1.0 / 3) * std::log(1.0 / 3) - (2.0 / 3) * std::log(2.0 / 3), 1e-12);
  EXPECT_NEAR(features::shannon_entropy(skew), 0.6365, 5e-4);
  EXPECT_EQ(features::shannon_entropy(one), 0.0);
  EXPECT_EQ(features::shannon_entropy(std::span<const std::size_t>{}), 0.0);
}

TEST(EntropyTest, MatchesOracleAndIsBoundedByLogN) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<std::string, std::size_t> counts;
    std::vector<std::size_t> flat;
    const std::size_t n = 1 + rng.below(8);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t f = 1 + rng.below(6);
      counts["w" + std::to_string(i)] = f;
      flat.push_back(f);
    }
    const double h = features::shannon_entropy(counts);
    EXPECT_NEAR(h, oracle::entropy(std::vector<double>(flat.begin(), flat.end())), 1e-12);
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, std::log(static_cast<double>(n)) + 1e-12);
    std::vector<std::size_t> reversed(flat.rbegin(), flat.rend());
    EXPECT_NEAR(features::shannon_entropy(reversed), h, 1e-12);
  }
  const std::size_t uniform[] = {4, 4, 4, 4};
  EXPECT_NEAR(features::shannon_entropy(uniform), std::log(4.0), 1e-12);
}

TEST(EntropyFeaturesTest, WorkedExamples) {
  const WordSet words = {"great", "slow"};
  EntropyTriple e = features::entropy_features(
      {"u", "The API is great, but it's slow", kNeu}, words, *resources());
  EXPECT_NEAR(e.polarity, 0.6931, 5e-4);
  EXPECT_EQ(features::entropy_features({"u", "The API works", kNeu}, words, *resources())
                .polarity,
            0.0);
  EntropyTriple v = features::entropy_features(
      {"u", "It works on Linux, fails on Mac and fails on Windows", kNeu}, words,
      *resources());
  EXPECT_NEAR(v.verb, 0.6365, 5e-4);
}

TEST(EntropyFeaturesTest, NegatedSentimentWordCountsAsItsBase) {
  const WordSet words = {"good", "slow"};
  TokenStream tagged = {{"NOT_good", TokenTag::kNegationMarker},
                        {"good", TokenTag::kAdjective},
                        {"slow", TokenTag::kAdjective}};
  EntropyTriple e = features::entropy_features(tagged, words);
  EXPECT_NEAR(e.polarity, 0.6365, 5e-4);
}

TEST(PartialPolarityTest, WorkedExamples) {
  EXPECT_EQ(features::partial_polarity({"u", "I like this tool. But it is slow.", kNeu},
                                       *valence(), *resources()),
            (PartialPolarity{kPos, kNeg}));
  EXPECT_EQ(features::partial_polarity({"u", "Thanks Arvind", kNeu}, *valence(),
                                       *resources()),
            (PartialPolarity{kPos, kPos}));
  EXPECT_EQ(features::partial_polarity({"u", "Hello", kNeu}, *valence(), *resources()),
            (PartialPolarity{kNeu, kNeu}));
  ExternalDetector ext("ext", {});
  EXPECT_THROW(features::partial_polarity({"u", "x", kNeu}, ext, *resources()),
               ConfigError);
}

TEST(VariantTest, NamesRoundTrip) {
  for (const char* name : {"B", "N", "B+", "BNE+", "BNP+", "N+", "NNE+", "NNP+"}) {
    EXPECT_EQ(Variant::parse(name).name(), name);
  }
  EXPECT_EQ(Variant::parse("BNE+"), (Variant{true, true, false}));
  EXPECT_EQ(Variant::parse("NNP+"), (Variant{false, false, true}));
  EXPECT_EQ(extended_variants().size(), 6u);
  EXPECT_THROW(Variant::parse("X+"), ConfigError);
}

FeatureContext context() {
  FeatureContext ctx;
  ctx.resources = resources();
  ctx.partial_base = valence();
  ctx.sentiment_words = {"great", "slow", "like"};
  return ctx;
}

const std::vector<std::string> kFive = {"a", "b", "c", "d", "e"};

TEST(AssemblerTest, VariantDimensions) {
  const TokenStream docs[] = {preprocess("great tool", *resources()),
                              preprocess("slow build", *resources())};
  Vocabulary vocab = Vocabulary::fit(docs, "train");
  const std::size_t v = vocab.size();
  ASSERT_EQ(v, 4u);
  EXPECT_EQ(FeatureAssembler(kFive, Variant::parse("N"), &vocab).dim(), 15u);
  EXPECT_EQ(FeatureAssembler(kFive, Variant::parse("B"), &vocab).dim(), 15u + v);
  EXPECT_EQ(FeatureAssembler(kFive, Variant::parse("B+"), &vocab).dim(), 15u + 6 + 3 + v);
  EXPECT_EQ(FeatureAssembler(kFive, Variant::parse("BNE+"), &vocab).dim(), 15u + 6 + v);
  EXPECT_EQ(FeatureAssembler(kFive, Variant::parse("NNP+"), &vocab).dim(), 15u + 3);

  auto names = FeatureAssembler(kFive, Variant::parse("B+"), &vocab).column_names();
  EXPECT_EQ(names[0], "a=negative");
  EXPECT_EQ(names[2], "a=positive");
  EXPECT_EQ(names[15], "first=negative");
  EXPECT_EQ(names[21], "entropy_polarity");
  EXPECT_EQ(names[24], "tfidf:" + std::string(vocab.terms()[0]));
}

TEST(AssemblerTest, OneHotBlocksHoldExactlyOneOnePerSlot) {
  FeatureContext ctx = context();
  const TokenStream docs[] = {preprocess("great tool", *resources())};
  Vocabulary vocab = Vocabulary::fit(docs, "train");
  FeatureAssembler fa(kFive, Variant::parse("B+"), &vocab);
  const Polarity labels[] = {kPos, kNeg, kNeu, kPos, kNeg};
  auto dense = fa.assemble(ctx.analyze({"u", "I like this tool. But it is slow.", kNeu}),
                           labels)
                   .dense();
  for (std::size_t slot = 0; slot < 7; ++slot) {
    double sum = 0;
    for (std::size_t c = 0; c < 3; ++c) sum += dense[slot * 3 + c];
    EXPECT_EQ(sum, 1.0) << "slot " << slot;
  }
  EXPECT_EQ(dense[0 * 3 + 2], 1.0);  // a = positive
  EXPECT_EQ(dense[1 * 3 + 0], 1.0);  // b = negative
  EXPECT_EQ(dense[15 + 2], 1.0);     // first = positive
  EXPECT_EQ(dense[18 + 0], 1.0);     // last = negative
  for (std::size_t i = 21; i < 24; ++i) EXPECT_GE(dense[i], 0.0);
}

TEST(AssemblerTest, NVariantIgnoresText) {
  FeatureContext ctx = context();
  const TokenStream docs[] = {preprocess("great tool", *resources())};
  Vocabulary vocab = Vocabulary::fit(docs, "train");
  const Polarity labels[] = {kPos, kNeg, kNeu, kPos, kNeg};
  for (const char* name : {"N", "N+", "NNE+", "NNP+"}) {
    Variant v = Variant::parse(name);
    auto a = features::assemble({"u", "", kNeu}, labels, kFive, vocab, v, ctx);
    auto b = features::assemble({"u", "great tool", kNeu}, labels, kFive, vocab, v, ctx);
    if (!v.partial && !v.entropy) {
      EXPECT_EQ(a, b) << name;
    } else {
      // Only the text-derived scalar blocks may differ; one-hots agree.
      for (std::uint32_t i = 0; i < 15; ++i) EXPECT_EQ(a.at(i), b.at(i)) << name;
    }
  }
}

TEST(AssemblerTest, LengthMismatchIsALayoutError) {
  FeatureContext ctx = context();
  Vocabulary vocab;
  const Polarity labels[] = {kPos, kNeg};
  EXPECT_THROW(features::assemble({"u", "x", kNeu}, labels, kFive, vocab,
                                  Variant::parse("N"), ctx),
               LayoutError);
}

TEST(VocabularyTest, TfidfWeightsAndUnknownTerms) {
  const TokenStream docs[] = {preprocess("alpha beta", *resources()),
                              preprocess("alpha gamma", *resources()),
                              preprocess("alpha", *resources())};
  Vocabulary vocab = Vocabulary::fit(docs, "train");
  ASSERT_EQ(vocab.terms().size(), 3u);
  EXPECT_EQ(vocab.terms()[0], "alpha");
  const double idf_alpha = std::log(4.0 / 4.0) + 1.0;
  const double idf_beta = std::log(4.0 / 2.0) + 1.0;
  EXPECT_NEAR(vocab.idf()[0], idf_alpha, 1e-12);
  EXPECT_NEAR(vocab.idf()[1], idf_beta, 1e-12);
  auto w = vocab.tfidf(preprocess("beta beta sentinelzz", *resources()));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].first, 1u);
  EXPECT_NEAR(w[0].second, 2 * idf_beta, 1e-12);
  EXPECT_FALSE(vocab.contains("sentinelzz"));
}

TEST(FeatureMatrixCsvTest, HeaderNamesEveryColumn) {
  Vocabulary vocab;
  FeatureAssembler fa({"a"}, Variant::parse("N"), &vocab);
  const Polarity labels[] = {kPos};
  FeatureContext ctx = context();
  std::vector<FeatureVector> rows = {fa.assemble(ctx.analyze({"u1", "x", kNeu}), labels)};
  const std::string ids[] = {"u1"};
  EXPECT_EQ(features::feature_matrix_csv(fa, ids, rows),
            "id,a=negative,a=neutral,a=positive\nu1,0,0,1\n");
}

}  // namespace
}  // namespace sentisead

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

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "sentisead/csv.h"
#include "sentisead/error.h"
#include "sentisead/textprep.h"

namespace sentisead {
namespace {

class TextprepTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { res_ = TextResources::load_default(); }
  static std::shared_ptr<const TextResources> res_;

  static std::vector<std::string> surfaces(const TokenStream& ts) {
    std::vector<std::string> out;
    for (const Token& t : ts) out.push_back(t.surface);
    return out;
  }
  static bool has(const TokenStream& ts, std::string_view s) {
    return std::any_of(ts.begin(), ts.end(),
                       [&](const Token& t) { return t.surface == s; });
  }
};

std::shared_ptr<const TextResources> TextprepTest::res_;

TEST_F(TextprepTest, NegatedContractionBecomesPrefixedToken) {
  TokenStream ts = textprep::preprocess("This isn't good", *res_);
  EXPECT_TRUE(has(ts, "NOT_good"));
  EXPECT_FALSE(has(ts, "good"));
}

TEST_F(TextprepTest, LetsExpandsToLetUs) {
  EXPECT_EQ(textprep::expand_contractions("let's", *res_), "let us");
  EXPECT_EQ(textprep::expand_contractions("Let's go", *res_), "let us go");
  TokenStream ts = textprep::preprocess("let's", *res_, WordSet{});
  EXPECT_EQ(surfaces(ts), (std::vector<std::string>{"let", "us"}));
}

TEST_F(TextprepTest, EmoticonBecomesPlaceholder) {
  const std::string replaced = textprep::replace_emoticons("%-(", *res_);
  EXPECT_NE(replaced.find("NegativeSentiment"), std::string::npos);
  TokenStream ts = textprep::preprocess("build failed again %-(", *res_);
  ASSERT_TRUE(has(ts, "NegativeSentiment"));
  for (const Token& t : ts) {
    if (t.surface == "NegativeSentiment") EXPECT_EQ(t.tag, TokenTag::kEmoticonMarker);
  }
}

TEST_F(TextprepTest, EmoticonsNeedTheirOwnChunk) {
  // "(:" inside a function call is not an emoticon.
  EXPECT_EQ(textprep::replace_emoticons("call f(:x)", *res_), "call f(:x)");
  EXPECT_NE(textprep::replace_emoticons("works now :)!", *res_).find("PositiveSentiment"),
            std::string::npos);
}

TEST_F(TextprepTest, EmojiMatchWithoutWhitespace) {
  EXPECT_NE(textprep::replace_emoticons("thanks\U0001F44D", *res_).find("PositiveSentiment"),
            std::string::npos);
}

TEST_F(TextprepTest, GenericNegatedContraction) {
  EXPECT_EQ(textprep::expand_contractions("it doesn't", *res_), "it does not");
  EXPECT_EQ(textprep::expand_contractions("it can't", *res_), "it can not");
  EXPECT_EQ(textprep::expand_contractions("it won't", *res_), "it will not");
}

TEST_F(TextprepTest, TokenizeLowercasesAndDropsPunctuation) {
  TokenStream ts = textprep::tokenize("The API's docs, sadly, are WRONG!!");
  EXPECT_EQ(surfaces(ts),
            (std::vector<std::string>{"the", "api", "docs", "sadly", "are", "wrong"}));
}

TEST_F(TextprepTest, NegationScopeIsTheNextToken) {
  TokenStream ts = textprep::annotate_negation(textprep::tokenize("not very good"));
  EXPECT_EQ(surfaces(ts), (std::vector<std::string>{"NOT_very", "good"}));
  TokenStream bare = textprep::annotate_negation(textprep::tokenize("absolutely not"));
  ASSERT_EQ(bare.size(), 2u);
  EXPECT_EQ(bare[1].tag, TokenTag::kNegationMarker);
}

TEST_F(TextprepTest, StopwordsAreRemoved) {
  TokenStream ts = textprep::remove_stopwords(textprep::tokenize("the build is green"),
                                              res_->stopwords);
  EXPECT_EQ(surfaces(ts), (std::vector<std::string>{"build", "green"}));
}

TEST_F(TextprepTest, PreprocessIsIdempotent) {
  for (const char* text :
       {"This isn't good", "The API is great, but it's slow :(", "let's ship it",
        "Never again. Nobody uses it!", "version 2.5 doesn't work %-("}) {
    const std::string once = textprep::join(textprep::preprocess(text, *res_));
    const std::string twice = textprep::join(textprep::preprocess(once, *res_));
    EXPECT_EQ(once, twice) << text;
  }
}

TEST_F(TextprepTest, NegationWords) {
  for (const char* w : {"not", "no", "never", "cannot", "nobody", "isn't", "won't"}) {
    EXPECT_TRUE(textprep::is_negation_word(w)) << w;
  }
  for (const char* w : {"note", "know", "n't", "nothing_"}) {
    EXPECT_FALSE(textprep::is_negation_word(w)) << w;
  }
}

TEST_F(TextprepTest, PosTaggingUsesLexiconsAndInflections) {
  EXPECT_EQ(textprep::classify_word("slow", *res_), TokenTag::kAdjective);
  EXPECT_EQ(textprep::classify_word("great", *res_), TokenTag::kAdjective);
  EXPECT_EQ(textprep::classify_word("works", *res_), TokenTag::kVerb);
  EXPECT_EQ(textprep::classify_word("fails", *res_), TokenTag::kVerb);
  EXPECT_EQ(textprep::classify_word("froze", *res_), TokenTag::kOther);
  EXPECT_EQ(textprep::classify_word("freezing", *res_), TokenTag::kVerb);
  EXPECT_EQ(textprep::classify_word("crashed", *res_), TokenTag::kVerb);
  EXPECT_EQ(textprep::classify_word("stopped", *res_), TokenTag::kVerb);
  EXPECT_EQ(textprep::classify_word("serialize", *res_), TokenTag::kVerb);
  EXPECT_EQ(textprep::classify_word("wonderful", *res_), TokenTag::kAdjective);
  EXPECT_EQ(textprep::classify_word("dangerous", *res_), TokenTag::kAdjective);
  EXPECT_EQ(textprep::classify_word("table", *res_), TokenTag::kOther);
}

TEST_F(TextprepTest, TagPosKeepsMarkers) {
  TokenStream ts = textprep::tag_pos(textprep::preprocess("not slow :)", *res_), *res_);
  for (const Token& t : ts) {
    EXPECT_TRUE(t.tag == TokenTag::kNegationMarker || t.tag == TokenTag::kEmoticonMarker)
        << t.surface;
  }
}

TEST_F(TextprepTest, SentenceFixture) {
  const std::string text =
      read_text_file(std::filesystem::path(SENTISEAD_TEST_DATA_DIR) / "sentences.tsv");
  std::size_t cases = 0, sentences = 0;
  for (const std::string& raw : split_fields(text, '\n')) {
    if (raw.empty() || raw.front() == '#') continue;
    const auto f = split_fields(raw, '\t');
    ASSERT_EQ(f.size(), 2u) << raw;
    std::vector<std::string> expected;
    std::string rest = f[1];
    for (std::size_t p; (p = rest.find(" || ")) != std::string::npos;) {
      expected.push_back(rest.substr(0, p));
      rest = rest.substr(p + 4);
    }
    expected.push_back(rest);

    std::vector<std::string> got;
    for (const SentenceSpan& s : textprep::split_sentences(f[0], *res_)) {
      got.push_back(f[0].substr(s.start, s.end - s.start));
    }
    EXPECT_EQ(got, expected) << f[0];
    ++cases;
    sentences += expected.size();
  }
  EXPECT_EQ(cases, 14u);
  EXPECT_GE(sentences, 30u);
}

TEST_F(TextprepTest, EmptyTextHasNoSentences) {
  EXPECT_TRUE(textprep::split_sentences("   ", *res_).empty());
}

TEST(TextResourcesTest, RejectsUnknownPlaceholder) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sentisead_bad_resources";
  fs::create_directories(dir);
  for (const char* f : {"stopwords.txt", "contractions.tsv", "adjectives.txt",
                        "verbs.txt", "abbreviations.txt"}) {
    write_file_atomic(dir / f, "");
  }
  write_file_atomic(dir / "emoticons.tsv", ":)\tHappy\n");
  EXPECT_THROW(TextResources::load(dir), FormatError);
  EXPECT_THROW(TextResources::load(dir / "missing"), IoError);
}

}  // namespace
}  // namespace sentisead

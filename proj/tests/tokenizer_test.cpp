// Copyright 2026 The Scribe Authors
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

#include "scribe/tokenizer.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scribe/entity_lexicon.hpp"
#include "scribe/error.hpp"
#include "scribe/normalization.hpp"

namespace scribe {
namespace {

std::vector<std::u32string> texts(const std::vector<Token>& tokens) {
  std::vector<std::u32string> out;
  for (const Token& t : tokens) out.push_back(t.text);
  return out;
}

std::vector<TokenCategory> categories(const std::vector<Token>& tokens) {
  std::vector<TokenCategory> out;
  for (const Token& t : tokens) out.push_back(t.category);
  return out;
}

TEST(TokenizeTest, DateIsOneNumeral) {
  const auto tokens = tokenize(U"22.05.2023");
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].text, U"22.05.2023");
  EXPECT_EQ(tokens[0].category, TokenCategory::numeral);
}

TEST(TokenizeTest, HyphenatedCompoundIsOneLexeme) {
  const auto tokens = tokenize(U"ice-cream");
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].text, U"ice-cream");
  EXPECT_EQ(tokens[0].category, TokenCategory::lexeme);
}

TEST(TokenizeTest, DandaSplitsOff) {
  const std::u32string text = U"वह आया।";
  const auto tokens = tokenize(text);
  EXPECT_EQ(texts(tokens), (std::vector<std::u32string>{U"वह", U"आया", U"।"}));
  EXPECT_EQ(categories(tokens),
            (std::vector<TokenCategory>{TokenCategory::lexeme,
                                        TokenCategory::lexeme,
                                        TokenCategory::punctuation}));
  // The danda is the last code point of the source.
  EXPECT_EQ(tokens[2].span, (Span{text.size() - 1, text.size()}));
}

TEST(TokenizeTest, Empty) {
  EXPECT_TRUE(tokenize(U"").empty());
}

TEST(TokenizeTest, AdjacentMarksOnePerToken) {
  const auto tokens = tokenize(U"क्या?! \"हाँ\"");
  EXPECT_EQ(texts(tokens), (std::vector<std::u32string>{
                               U"क्या", U"?", U"!", U"\"", U"हाँ", U"\""}));
}

TEST(TokenizeTest, DoubleDandaAndTrailingComma) {
  const auto tokens = tokenize(U"राम, श्याम॥");
  EXPECT_EQ(texts(tokens),
            (std::vector<std::u32string>{U"राम", U",", U"श्याम", U"॥"}));
}

TEST(TokenizeTest, NumeralsKeepInnerDelimitersOnly) {
  const auto tokens = tokenize(U"₹1,500. 10:30, 302A");
  EXPECT_EQ(texts(tokens), (std::vector<std::u32string>{
                               U"₹1,500", U".", U"10:30", U",", U"302A"}));
  EXPECT_EQ(categories(tokens),
            (std::vector<TokenCategory>{
                TokenCategory::numeral, TokenCategory::punctuation,
                TokenCategory::numeral, TokenCategory::punctuation,
                TokenCategory::numeral}));
}

TEST(TokenizeTest, IndicDigitsAreNumerals) {
  const auto tokens = tokenize(U"२२.०५.२०२३ ೧೨ ൧൦");
  EXPECT_EQ(categories(tokens),
            (std::vector<TokenCategory>{TokenCategory::numeral,
                                        TokenCategory::numeral,
                                        TokenCategory::numeral}));
}

TEST(TokenizeTest, HyphenAgainstDigitOrEdgeSplits) {
  EXPECT_EQ(texts(tokenize(U"-ice cream- a-5")),
            (std::vector<std::u32string>{U"-", U"ice", U"cream", U"-", U"a",
                                         U"-", U"5"}));
  // Devanagari compounds end in matras; those count as letters.
  EXPECT_EQ(texts(tokenize(U"देखा-सुना")),
            (std::vector<std::u32string>{U"देखा-सुना"}));
}

TEST(ShieldTest, SectionReferenceIsAtomic) {
  const std::u32string text = U"आरोपी पर धारा 302 लगी";
  const EntityLexicon lexicon = EntityLexicon::from_patterns({R"(धारा\s+\d+)"});
  const auto spans = shield_entities(text, lexicon);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(text.substr(spans[0].span.start, spans[0].span.size()), U"धारा 302");

  const auto tokens = tokenize(text, lexicon);
  EXPECT_EQ(texts(tokens), (std::vector<std::u32string>{U"आरोपी", U"पर",
                                                        U"धारा 302", U"लगी"}));
  EXPECT_EQ(tokens[2].category, TokenCategory::domain_entity);
  // Brute force: no token other than the entity lies inside the match.
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i == 2) continue;
    EXPECT_FALSE(tokens[i].span.overlaps(spans[0].span)) << i;
  }
}

TEST(ShieldTest, EmptyLexicon) {
  EXPECT_TRUE(shield_entities(U"धारा 302", EntityLexicon()).empty());
}

TEST(ShieldTest, EarlierPatternWinsOverlap) {
  // Pattern 0 matches a prefix of pattern 1's match.
  const std::u32string text = U"section 302 ipc";
  const EntityLexicon lexicon =
      EntityLexicon::from_patterns({R"(section \d+)", R"(section \d+ ipc)"});
  const auto spans = shield_entities(text, lexicon);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].pattern_index, 0u);
  EXPECT_EQ(spans[0].span, (Span{0, 11}));

  const auto expected = oracle::resolve_entities(text, lexicon);
  ASSERT_EQ(expected.size(), 1u);
  EXPECT_EQ(std::get<0>(expected[0]), 0u);
  EXPECT_EQ(std::get<1>(expected[0]), 0u);
  EXPECT_EQ(std::get<2>(expected[0]), 11u);
}

TEST(ShieldTest, LongestMatchAtLeftmostStart) {
  // Perl-style alternation would stop at "IPC"; the shield takes the longest.
  const EntityLexicon lexicon = EntityLexicon::from_patterns({"IPC|IPC 1860"});
  const auto spans = shield_entities(U"under IPC 1860 act", lexicon);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].span, (Span{6, 14}));
}

TEST(ShieldTest, InvalidPatternNamesItsId) {
  std::istringstream file("# legal entities\n\nधारा\\s+\\d+\n(unclosed\n");
  try {
    EntityLexicon::parse(file);
    FAIL() << "expected LexiconError";
  } catch (const LexiconError& e) {
    EXPECT_EQ(e.pattern_id(), "4");
    EXPECT_EQ(e.index(), 1u);
    EXPECT_NE(std::string(e.what()).find("'4'"), std::string::npos);
  }
}

TEST(ShieldTest, LexiconFileIdsAreLineNumbers) {
  std::istringstream file("# comment\nIPC\n\n  CrPC  \n");
  const EntityLexicon lexicon = EntityLexicon::parse(file);
  ASSERT_EQ(lexicon.size(), 2u);
  EXPECT_EQ(lexicon.patterns()[0].id, "2");
  EXPECT_EQ(lexicon.patterns()[1].id, "4");
  EXPECT_EQ(lexicon.patterns()[1].source, "CrPC");
}

TEST(ShieldTest, MatchesOracleOnRandomText) {
  const EntityLexicon lexicon = EntityLexicon::from_patterns(
      {R"(ab+)", R"(b\s?a)", R"(a b a|a)", R"(\d+(\.\d+)?)"});
  std::mt19937 rng(11);
  const std::u32string alphabet = U"ab 1.";
  for (int round = 0; round < 400; ++round) {
    std::u32string s;
    const int len = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int i = 0; i < len; ++i) {
      s.push_back(alphabet[std::uniform_int_distribution<std::size_t>(
          0, alphabet.size() - 1)(rng)]);
    }
    const auto got = shield_entities(s, lexicon);
    const auto want = oracle::resolve_entities(s, lexicon);
    ASSERT_EQ(got.size(), want.size()) << unicode::to_utf8(s);
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].pattern_index, std::get<0>(want[i]));
      EXPECT_EQ(got[i].span, (Span{std::get<1>(want[i]), std::get<2>(want[i])}));
    }
  }
}

// Property suite over random normalized text.
class TokenizePropertyTest : public ::testing::Test {
 protected:
  std::u32string random_text(std::mt19937& rng) {
    static const std::u32string alphabet =
        U"कखानाि्अ aबc-1२.,/।?\"  ";
    std::u32string s;
    const int len = std::uniform_int_distribution<int>(0, 20)(rng);
    for (int i = 0; i < len; ++i) {
      s.push_back(alphabet[std::uniform_int_distribution<std::size_t>(
          0, alphabet.size() - 1)(rng)]);
    }
    return normalize(s);
  }
};

TEST_F(TokenizePropertyTest, Invariants) {
  const EntityLexicon lexicon =
      EntityLexicon::from_patterns({R"(क\s?ख)", R"(\d+\s\d+)"});
  std::mt19937 rng(5);
  for (int round = 0; round < 2000; ++round) {
    const std::u32string text = random_text(rng);
    const auto tokens = tokenize(text, lexicon);
    const auto shields = shield_entities(text, lexicon);
    const std::string ctx = unicode::to_utf8(text);

    EXPECT_EQ(reconstruct(text, tokens), text) << ctx;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      ASSERT_FALSE(t.text.empty()) << ctx;
      EXPECT_EQ(text.substr(t.span.start, t.span.size()), t.text) << ctx;
      if (i > 0) {
        EXPECT_LE(tokens[i - 1].span.end, t.span.start) << ctx;
      }

      const bool has_digit = std::ranges::any_of(t.text, unicode::is_digit);
      switch (t.category) {
        case TokenCategory::lexeme:
          EXPECT_FALSE(has_digit) << ctx;
          EXPECT_FALSE(std::ranges::any_of(t.text, unicode::is_whitespace)) << ctx;
          break;
        case TokenCategory::numeral:
          EXPECT_TRUE(has_digit) << ctx;
          EXPECT_FALSE(std::ranges::any_of(t.text, unicode::is_whitespace)) << ctx;
          break;
        case TokenCategory::punctuation:
          EXPECT_TRUE(std::ranges::all_of(t.text, unicode::is_punctuation)) << ctx;
          break;
        case TokenCategory::domain_entity:
          break;
      }
      for (const EntityMatch& s : shields) {
        const bool inside = t.span.start >= s.span.start && t.span.end <= s.span.end;
        const bool disjoint = !t.span.overlaps(s.span);
        EXPECT_TRUE(disjoint || (inside && t.span == s.span)) << ctx;
      }
    }
  }
}

}  // namespace
}  // namespace scribe

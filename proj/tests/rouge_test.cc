// Copyright 2026 The Gapsent Authors.
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


#include "gapsent/rouge.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace gapsent {
namespace {

void ExpectScore(const RougeScore& s, double p, double r, double f) {
  EXPECT_DOUBLE_EQ(s.precision, p);
  EXPECT_DOUBLE_EQ(s.recall, r);
  EXPECT_DOUBLE_EQ(s.f1, f);
}

TEST(RougeNTest, SelfMatchIsOne) {
  const TokenList t = {"the", "cat", "sat", "on", "the", "mat"};
  for (int n = 1; n <= 6; ++n) {
    ExpectScore(RougeN(t, t, n), 1.0, 1.0, 1.0);
    ExpectScore(RougeN(t, t, n, NGramMode::kUniq), 1.0, 1.0, 1.0);
  }
}

TEST(RougeNTest, DisjointIsZero) {
  ExpectScore(RougeN(TokenList{"a", "b"}, TokenList{"c", "d"}, 1), 0, 0, 0);
}

TEST(RougeNTest, ClippedOverlapOrigAndUniq) {
  const TokenList cand = {"a", "b", "a"};
  const TokenList ref = {"a", "a", "c"};
  ExpectScore(RougeN(cand, ref, 1, NGramMode::kOrig), 2.0 / 3, 2.0 / 3,
              2.0 / 3);
  ExpectScore(RougeN(cand, ref, 1, NGramMode::kUniq), 0.5, 0.5, 0.5);
}

TEST(RougeNTest, EmptySidesAndShortLists) {
  ExpectScore(RougeN(TokenList{}, TokenList{"a"}, 1), 0, 0, 0);
  ExpectScore(RougeN(TokenList{"a"}, TokenList{}, 1), 0, 0, 0);
  ExpectScore(RougeN(TokenList{"a"}, TokenList{"a"}, 2), 0, 0, 0);
}

TEST(RougeNTest, SymmetryOfF1) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    const TokenList a = oracle::RandomTokens(gen, 8, 4);
    const TokenList b = oracle::RandomTokens(gen, 8, 4);
    for (int n = 1; n <= 2; ++n) {
      const RougeScore ab = RougeN(a, b, n);
      const RougeScore ba = RougeN(b, a, n);
      EXPECT_DOUBLE_EQ(ab.f1, ba.f1);
      EXPECT_DOUBLE_EQ(ab.precision, ba.recall);
    }
  }
}

TEST(RougeNTest, MatchesWindowOracle) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const TokenList a = oracle::RandomTokens(gen, 8, 4);
    const TokenList b = oracle::RandomTokens(gen, 8, 4);
    for (int n = 1; n <= 3; ++n) {
      for (bool uniq : {false, true}) {
        const auto want = oracle::RougeN(a, b, n, uniq);
        const auto got =
            RougeN(a, b, n, uniq ? NGramMode::kUniq : NGramMode::kOrig);
        EXPECT_NEAR(got.precision, want.p, 1e-12);
        EXPECT_NEAR(got.recall, want.r, 1e-12);
        EXPECT_NEAR(got.f1, want.f, 1e-12);
      }
    }
  }
}

TEST(RougeNTest, ScoreFromCountsZeroDenominators) {
  ExpectScore(ScoreFromCounts(0, 0, 0), 0, 0, 0);
  ExpectScore(ScoreFromCounts(1, 2, 4), 0.5, 0.25, 1.0 / 3);
}

TEST(RougeLTest, Examples) {
  const TokenList t = {"x", "y", "z"};
  EXPECT_DOUBLE_EQ(RougeL(t, t).f1, 1.0);
  const TokenList a = {"a", "b", "c", "d"};
  const TokenList b = {"a", "c", "b", "d"};
  EXPECT_EQ(LcsLength(a, b), 3u);
  ExpectScore(RougeL(a, b), 0.75, 0.75, 0.75);
  ExpectScore(RougeL(TokenList{}, TokenList{"a"}), 0, 0, 0);
}

TEST(RougeLTest, MatchesRecursiveOracle) {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const TokenList a = oracle::RandomTokens(gen, 8, 4);
    const TokenList b = oracle::RandomTokens(gen, 8, 4);
    EXPECT_EQ(LcsLength(a, b), oracle::LcsRecursive(a, 0, b, 0));
    const auto want = oracle::RougeL(a, b);
    const RougeScore got = RougeL(a, b);
    EXPECT_NEAR(got.precision, want.p, 1e-12);
    EXPECT_NEAR(got.recall, want.r, 1e-12);
    EXPECT_NEAR(got.f1, want.f, 1e-12);
  }
}

TEST(Rouge2RecallSimilarityTest, Examples) {
  const TokenList doc = {"w", "a", "b", "c", "v"};
  EXPECT_DOUBLE_EQ(Rouge2RecallSimilarity(TokenList{"a", "b", "c"}, doc), 1.0);
  EXPECT_DOUBLE_EQ(Rouge2RecallSimilarity(TokenList{"q", "r"}, doc), 0.0);
  EXPECT_DOUBLE_EQ(Rouge2RecallSimilarity(TokenList{"a", "b", "c"},
                                          TokenList{"a", "b", "x", "c"}),
                   0.5);
  // A target with no bigrams has nothing to recall.
  EXPECT_DOUBLE_EQ(Rouge2RecallSimilarity(TokenList{"a"}, doc), 0.0);
}

TEST(Rouge2RecallSimilarityTest, ContainedButNotIdentical) {
  // Every target bigram occurs in the document, in a different arrangement.
  const TokenList target = {"a", "b", "c", "d"};
  const TokenList doc = {"c", "d", "x", "a", "b", "y", "b", "c"};
  EXPECT_NE(target, doc);
  EXPECT_DOUBLE_EQ(Rouge2RecallSimilarity(target, doc), 1.0);
}

TEST(Rouge2RecallSimilarityTest, MatchesOracle) {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 500; ++trial) {
    const TokenList a = oracle::RandomTokens(gen, 8, 3);
    const TokenList b = oracle::RandomTokens(gen, 12, 3);
    EXPECT_NEAR(Rouge2RecallSimilarity(a, b), oracle::Rouge2Recall(a, b),
                1e-12);
  }
}

}  // namespace
}  // namespace gapsent

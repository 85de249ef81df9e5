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


#include "gapsent/mask.h"

#include <string>

#include "gapsent/errors.h"
#include "gtest/gtest.h"
#include "synthetic.h"

namespace gapsent {
namespace {

const Token kM1(kMask1);
const Token kM2(kMask2);

Document ThreeSentences() {
  Document doc;
  doc.id = "d";
  for (const char* s : {"a b.", "c d e.", "f."}) {
    doc.sentences.push_back(MakeSentence(s));
  }
  return doc;
}

SelectionResult Selected(std::vector<int> idx) {
  SelectionResult r;
  r.selected = std::move(idx);
  r.m = static_cast<int>(r.selected.size());
  return r;
}

// Rebuilds the document tokens from an example without MLM corruption.
TokenList Reconstruct(const PretrainExample& ex, const Document& doc) {
  TokenList out;
  std::size_t target_pos = 0;
  for (const InputSpan& span : ex.spans) {
    const std::size_t len = doc.sentences[span.sentence].tokens.size();
    if (span.kind == InputSpan::Kind::kMasked) {
      out.insert(out.end(), ex.target_tokens.begin() + target_pos,
                 ex.target_tokens.begin() + target_pos + len);
    } else {
      out.insert(out.end(), ex.input_tokens.begin() + span.begin,
                 ex.input_tokens.begin() + span.end);
    }
    if (span.kind != InputSpan::Kind::kPlain) target_pos += len;
  }
  return out;
}

TEST(BuildGsgExampleTest, MasksOneSentence) {
  Rng rng(0);
  auto ex = BuildGsgExample(ThreeSentences(), Selected({1}), 0.0, rng);
  EXPECT_EQ(ex.input_tokens, (TokenList{"a", "b", kM1, "f"}));
  EXPECT_EQ(ex.target_tokens, (TokenList{"c", "d", "e"}));
  EXPECT_TRUE(ex.copied_indices.empty());
  EXPECT_EQ(ex.selected_indices, (std::vector<int>{1}));
  ASSERT_EQ(ex.spans.size(), 3u);
  EXPECT_EQ(ex.spans[1], (InputSpan{1, InputSpan::Kind::kMasked, 2, 3}));
}

TEST(BuildGsgExampleTest, CopyRateOneKeepsInput) {
  Rng rng(0);
  auto ex = BuildGsgExample(ThreeSentences(), Selected({1}), 1.0, rng);
  EXPECT_EQ(ex.input_tokens, (TokenList{"a", "b", "c", "d", "e", "f"}));
  EXPECT_EQ(ex.target_tokens, (TokenList{"c", "d", "e"}));
  EXPECT_EQ(ex.copied_indices, (std::vector<int>{1}));
}

TEST(BuildGsgExampleTest, MultipleGapsKeepDocumentOrder) {
  Rng rng(0);
  auto ex = BuildGsgExample(ThreeSentences(), Selected({0, 2}), 0.0, rng);
  EXPECT_EQ(ex.input_tokens, (TokenList{kM1, "c", "d", "e", kM1}));
  EXPECT_EQ(ex.target_tokens, (TokenList{"a", "b", "f"}));
}

TEST(BuildGsgExampleTest, RejectsBadInputs) {
  Rng rng(0);
  EXPECT_THROW(BuildGsgExample(ThreeSentences(), Selected({3}), 0.0, rng),
               InvariantError);
  EXPECT_THROW(BuildGsgExample(ThreeSentences(), Selected({1}), 1.5, rng),
               ConfigError);
}

TEST(BuildGsgExampleTest, RoundTripAndCopyFraction) {
  synthetic::WordSource words(99);
  Rng rng(3);
  long selected = 0;
  long copied = 0;
  for (int d = 0; d < 2000; ++d) {
    const Document doc = synthetic::MakeDocument(words, "x", words.Uniform(2, 9));
    const int n = static_cast<int>(doc.sentences.size());
    const auto sel = SelectGapSentences(doc, SelectionStrategy::Parse("random"),
                                        GsrPolicy::Fixed(0.45), rng);
    const auto plain = BuildGsgExample(doc, sel, 0.0, rng);
    ASSERT_EQ(Reconstruct(plain, doc), doc.Tokens());
    EXPECT_EQ(plain.input_tokens.size() + plain.target_tokens.size(),
              doc.TokenCount() + sel.selected.size());
    const auto mixed = BuildGsgExample(doc, sel, 0.2, rng);
    ASSERT_EQ(Reconstruct(mixed, doc), doc.Tokens());
    selected += static_cast<long>(sel.selected.size());
    copied += static_cast<long>(mixed.copied_indices.size());
    EXPECT_LE(static_cast<int>(sel.selected.size()), n - 1);
  }
  EXPECT_NEAR(static_cast<double>(copied) / selected, 0.2, 0.02);
}

MlmConfig DefaultMlm() {
  MlmConfig c;
  c.vocabulary = {"zz0", "zz1", "zz2"};
  return c;
}

TEST(ApplyMlmTest, ZeroRateIsNoOp) {
  Rng rng(0);
  auto ex = BuildGsgExample(ThreeSentences(), Selected({1}), 0.0, rng);
  MlmConfig c = DefaultMlm();
  c.token_select_rate = 0.0;
  EXPECT_EQ(ApplyMlm(ex, c, rng), ex);
}

TEST(ApplyMlmTest, FullRateMasksOnlyPlainSentences) {
  Rng rng(0);
  auto ex = BuildGsgExample(ThreeSentences(), Selected({1}), 0.0, rng);
  MlmConfig c = DefaultMlm();
  c.token_select_rate = 1.0;
  c.mask_frac = 1.0;
  c.random_frac = 0.0;
  c.keep_frac = 0.0;
  auto out = ApplyMlm(ex, c, rng);
  EXPECT_EQ(out.input_tokens, (TokenList{kM2, kM2, kM1, kM2}));
  EXPECT_EQ(out.mlm_labels,
            (std::vector<MlmLabel>{{0, "a"}, {1, "b"}, {3, "f"}}));
  EXPECT_EQ(out.target_tokens, ex.target_tokens);
}

TEST(ApplyMlmTest, CopiedSentencesAreNotCorrupted) {
  Rng rng(0);
  auto ex = BuildGsgExample(ThreeSentences(), Selected({1}), 1.0, rng);
  MlmConfig c = DefaultMlm();
  c.token_select_rate = 1.0;
  auto out = ApplyMlm(ex, c, rng);
  EXPECT_EQ(out.mlm_labels.size(), 3u);
  EXPECT_EQ(TokenList(out.input_tokens.begin() + 2,
                      out.input_tokens.begin() + 5),
            (TokenList{"c", "d", "e"}));
}

TEST(ApplyMlmTest, RejectsRelabelingAndBadConfig) {
  Rng rng(0);
  auto ex = BuildGsgExample(ThreeSentences(), Selected({1}), 0.0, rng);
  MlmConfig c = DefaultMlm();
  c.token_select_rate = 1.0;
  auto once = ApplyMlm(ex, c, rng);
  EXPECT_THROW(ApplyMlm(once, c, rng), InvariantError);
  c.mask_frac = 0.5;
  EXPECT_THROW(ApplyMlm(ex, c, rng), ConfigError);
  MlmConfig empty_vocab;
  EXPECT_THROW(ApplyMlm(ex, empty_vocab, rng), ConfigError);
}

TEST(ApplyMlmTest, RatesOnLargeSample) {
  // One long unselected sentence and one short gap.
  Document doc;
  doc.id = "big";
  Sentence big;
  for (int i = 0; i < 100000; ++i) big.tokens.push_back("w" + std::to_string(i % 97));
  doc.sentences.push_back(std::move(big));
  doc.sentences.push_back(MakeSentence("gap."));
  Rng rng(12345);
  auto ex = BuildGsgExample(doc, Selected({1}), 0.0, rng);
  const TokenList original = ex.input_tokens;
  auto out = ApplyMlm(ex, DefaultMlm(), rng);
  long masked = 0;
  long random = 0;
  long kept = 0;
  for (const MlmLabel& l : out.mlm_labels) {
    ASSERT_EQ(l.original, original[l.position]);
    const Token& now = out.input_tokens[l.position];
    if (now == kM2) {
      ++masked;
    } else if (now == l.original) {
      ++kept;
    } else {
      ++random;
    }
  }
  const double total = static_cast<double>(out.mlm_labels.size());
  EXPECT_NEAR(total / 100000.0, 0.15, 0.01);
  EXPECT_NEAR(masked / total, 0.8, 0.02);
  EXPECT_NEAR(random / total, 0.1, 0.02);
  EXPECT_NEAR(kept / total, 0.1, 0.02);
  // Unlabeled positions are untouched.
  std::size_t changed = 0;
  for (std::size_t i = 0; i < original.size(); ++i) {
    changed += original[i] != out.input_tokens[i];
  }
  EXPECT_EQ(changed, static_cast<std::size_t>(masked + random));
}

TEST(TruncateExampleTest, UnderLimitsUnchanged) {
  Rng rng(0);
  auto ex = BuildGsgExample(ThreeSentences(), Selected({1}), 0.0, rng);
  EXPECT_EQ(TruncateExample(ex, 512, 256), ex);
}

TEST(TruncateExampleTest, CutsInputLabelsAndSpans) {
  Document doc;
  doc.id = "long";
  Sentence a;
  for (int i = 0; i < 600; ++i) a.tokens.push_back("t" + std::to_string(i));
  doc.sentences.push_back(a);
  Sentence b;
  for (int i = 0; i < 300; ++i) b.tokens.push_back("u" + std::to_string(i));
  doc.sentences.push_back(b);
  doc.sentences.push_back(MakeSentence("tail."));
  Rng rng(0);
  auto ex = BuildGsgExample(doc, Selected({1}), 0.0, rng);
  ex.mlm_labels = {{10, "t10"}, {550, "t550"}};
  auto out = TruncateExample(ex, 512, 256);
  ASSERT_EQ(out.input_tokens.size(), 512u);
  EXPECT_EQ(out.input_tokens.back(), "t511");
  EXPECT_EQ(out.target_tokens.size(), 256u);
  EXPECT_EQ(out.mlm_labels, (std::vector<MlmLabel>{{10, "t10"}}));
  ASSERT_EQ(out.spans.size(), 1u);
  EXPECT_EQ(out.spans[0].end, 512u);
  EXPECT_THROW(TruncateExample(ex, 0, 1), ConfigError);
}

}  // namespace
}  // namespace gapsent

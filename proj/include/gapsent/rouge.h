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

#ifndef GAPSENT_ROUGE_H_
#define GAPSENT_ROUGE_H_

#include <cstddef>
#include <span>

#include "gapsent/segment.h"

namespace gapsent {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const RougeScore&) const = default;
};

// Precision/recall/F1 from a clipped overlap count and the two n-gram totals.
// A zero total gives 0 for its side; F1 is 0 when precision + recall is 0.
// Every scorer in the library goes through this function, so equal counts
// always produce bit-identical scores.
RougeScore ScoreFromCounts(long overlap, long candidate_total,
                           long reference_total);

// ROUGE-N between token lists. In kUniq mode both bags are clamped to sets
// before clipping and totals count distinct n-grams.
RougeScore RougeN(std::span<const Token> candidate,
                  std::span<const Token> reference, int n,
                  NGramMode mode = NGramMode::kOrig);

// Length of a longest common subsequence.
std::size_t LcsLength(std::span<const Token> a, std::span<const Token> b);

// Sentence-level ROUGE-L: plain LCS over the whole token sequences.
RougeScore RougeL(std::span<const Token> candidate,
                  std::span<const Token> reference);

// Shared bigrams (multiset, clipped) divided by the bigram count of
// `test_target`. 0 when the target has fewer than two tokens. Asymmetric.
double Rouge2RecallSimilarity(std::span<const Token> test_target,
                              std::span<const Token> corpus_doc);

}  // namespace gapsent

#endif  // GAPSENT_ROUGE_H_

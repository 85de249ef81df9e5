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

#include <algorithm>
#include <vector>

#include "gapsent/errors.h"
#include "ngram_counts.h"

namespace gapsent {

RougeScore ScoreFromCounts(long overlap, long candidate_total,
                           long reference_total) {
  RougeScore score;
  if (candidate_total > 0) {
    score.precision = static_cast<double>(overlap) / candidate_total;
  }
  if (reference_total > 0) {
    score.recall = static_cast<double>(overlap) / reference_total;
  }
  const double sum = score.precision + score.recall;
  if (sum > 0) score.f1 = 2.0 * score.precision * score.recall / sum;
  return score;
}

RougeScore RougeN(std::span<const Token> candidate,
                  std::span<const Token> reference, int n, NGramMode mode) {
  if (n < 1) throw ConfigError("ROUGE-N order must be >= 1");
  const auto cand = internal::CountNGrams(candidate, n);
  const auto ref = internal::CountNGrams(reference, n);
  const bool uniq = mode == NGramMode::kUniq;
  const long overlap = internal::ClippedOverlap(cand, ref, uniq);
  if (uniq) {
    return ScoreFromCounts(overlap, static_cast<long>(cand.size()),
                           static_cast<long>(ref.size()));
  }
  return ScoreFromCounts(overlap, internal::NGramTotal(candidate.size(), n),
                         internal::NGramTotal(reference.size(), n));
}

std::size_t LcsLength(std::span<const Token> a, std::span<const Token> b) {
  if (a.empty() || b.empty()) return 0;
  // Two rolling rows over the shorter sequence.
  std::span<const Token> outer = a.size() >= b.size() ? a : b;
  std::span<const Token> inner = a.size() >= b.size() ? b : a;
  std::vector<std::size_t> prev(inner.size() + 1, 0);
  std::vector<std::size_t> cur(inner.size() + 1, 0);
  for (const Token& x : outer) {
    for (std::size_t j = 1; j <= inner.size(); ++j) {
      cur[j] = x == inner[j - 1] ? prev[j - 1] + 1
                                 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[inner.size()];
}

RougeScore RougeL(std::span<const Token> candidate,
                  std::span<const Token> reference) {
  const auto lcs = static_cast<long>(LcsLength(candidate, reference));
  return ScoreFromCounts(lcs, static_cast<long>(candidate.size()),
                         static_cast<long>(reference.size()));
}

double Rouge2RecallSimilarity(std::span<const Token> test_target,
                              std::span<const Token> corpus_doc) {
  const long target_total = internal::NGramTotal(test_target.size(), 2);
  if (target_total == 0) return 0.0;
  const auto target = internal::CountNGrams(test_target, 2);
  const auto doc = internal::CountNGrams(corpus_doc, 2);
  return static_cast<double>(internal::ClippedOverlap(target, doc, false)) /
         target_total;
}

}  // namespace gapsent

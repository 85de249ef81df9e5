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

// Gap-sentence selection.
//
// A document of n sentences yields m = round(gsr * n) gap sentences, clamped
// to [1, n - 1] so that both the masked input and the pseudo-summary are
// non-empty. Four strategies are supported:
//
//   lead      the first m sentences
//   random    m sentences uniformly without replacement
//   ind-*     the m sentences with the highest ROUGE-1 F1 against the rest of
//             the document, each scored on its own
//   seq-*     greedy: repeatedly add the sentence that maximizes ROUGE-1 F1
//             between the selected set and the remaining sentences
//
// The -orig / -uniq suffix picks multiset or set n-gram counting. All score
// ties go to the lowest sentence index.

#ifndef GAPSENT_SELECT_H_
#define GAPSENT_SELECT_H_

#include <string>
#include <string_view>
#include <vector>

#include "gapsent/random.h"
#include "gapsent/segment.h"

namespace gapsent {

enum class StrategyKind { kLead, kRandom, kPrincipalInd, kPrincipalSeq };

struct SelectionStrategy {
  StrategyKind kind = StrategyKind::kPrincipalInd;
  // Only meaningful for the principal kinds.
  NGramMode ngram_mode = NGramMode::kOrig;

  // One of "lead", "random", "ind-orig", "ind-uniq", "seq-orig", "seq-uniq".
  static SelectionStrategy Parse(std::string_view name);
  std::string Name() const;

  bool operator==(const SelectionStrategy&) const = default;
};

struct GsrPolicy {
  enum class Mode { kFixed, kDynamicUniform };

  Mode mode = Mode::kFixed;
  double gsr = 0.3;
  // Range for kDynamicUniform; one draw per document.
  double lo = 0.15;
  double hi = 0.45;
  // Relative noise on independent scores: s * (1 + U(-noise, +noise)).
  // 0 disables noise and consumes no randomness.
  double score_noise = 0.0;

  static GsrPolicy Fixed(double gsr, double score_noise = 0.0);
  static GsrPolicy DynamicUniform(double lo, double hi,
                                  double score_noise = 0.0);

  // Throws ConfigError when a ratio is outside (0, 1), lo > hi, or the
  // noise is outside [0, 1).
  void Validate() const;
  double Draw(Rng& rng) const;
};

struct SelectionResult {
  // Strictly increasing sentence indices.
  std::vector<int> selected;
  // Ranking scores for the principal strategies, one per sentence; empty for
  // lead and random. Ind: the (possibly noised) independent score. Seq: the
  // objective value in the step the sentence was picked, or in the final
  // step for sentences never picked.
  std::vector<double> scores;
  int m = 0;
  double gsr_used = 0.0;
};

// round_half_up(gsr * n) clamped to [1, n - 1]. Throws
// DegenerateDocumentError when n < 2.
int ComputeM(double gsr, int n);

// Score of each sentence: ROUGE-1 F1 between the sentence and the
// concatenation of all other sentences.
std::vector<double> ScoreIndependent(const Document& doc, NGramMode mode);

// Selects exactly m sentences (1 <= m <= n - 1). Seq with nonzero noise is
// rejected with ConfigError.
SelectionResult SelectWithCount(const Document& doc,
                                const SelectionStrategy& strategy, int m,
                                Rng& rng, double score_noise = 0.0);

// Draws the ratio from `policy`, derives m and selects.
SelectionResult SelectGapSentences(const Document& doc,
                                   const SelectionStrategy& strategy,
                                   const GsrPolicy& policy, Rng& rng);

}  // namespace gapsent

#endif  // GAPSENT_SELECT_H_

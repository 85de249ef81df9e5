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

// Pre-training example assembly: gap sentences are replaced by a [MASK1]
// sentinel in the input and concatenated into the target; optionally some
// of them stay visible in the input, and tokens of the remaining sentences
// get BERT-style [MASK2] corruption.

#ifndef GAPSENT_MASK_H_
#define GAPSENT_MASK_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gapsent/random.h"
#include "gapsent/segment.h"
#include "gapsent/select.h"

namespace gapsent {

inline constexpr std::string_view kMask1 = "[MASK1]";
inline constexpr std::string_view kMask2 = "[MASK2]";

struct MlmConfig {
  double token_select_rate = 0.15;
  double mask_frac = 0.8;
  double random_frac = 0.1;
  double keep_frac = 0.1;
  // Replacement pool for the random branch.
  std::vector<Token> vocabulary;

  // Throws ConfigError unless the three fractions sum to 1 (within 1e-9),
  // every rate lies in [0, 1], and the vocabulary is non-empty whenever
  // random_frac > 0.
  void Validate() const;
};

struct MlmLabel {
  std::size_t position = 0;
  Token original;

  bool operator==(const MlmLabel&) const = default;
};

// Where each document sentence ended up in the input sequence.
struct InputSpan {
  enum class Kind { kPlain, kMasked, kCopied };

  int sentence = 0;
  Kind kind = Kind::kPlain;
  // [begin, end) in input_tokens. A masked sentence spans its one sentinel.
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const InputSpan&) const = default;
};

struct PretrainExample {
  std::string id;
  TokenList input_tokens;
  TokenList target_tokens;
  std::vector<MlmLabel> mlm_labels;
  std::vector<int> selected_indices;
  // Selected sentences left unchanged in the input.
  std::vector<int> copied_indices;
  std::vector<InputSpan> spans;
  double gsr_used = 0.0;

  bool operator==(const PretrainExample&) const = default;
};

// Each selected sentence is kept verbatim in the input with probability
// `copy_unchanged_rate` (one independent draw per selected sentence, in
// index order) and replaced by a single [MASK1] otherwise. Every selected
// sentence goes to the target either way.
PretrainExample BuildGsgExample(const Document& doc,
                                const SelectionResult& selection,
                                double copy_unchanged_rate, Rng& rng);

// Corrupts tokens of unselected sentences. Each token is picked with
// probability token_select_rate; a picked token becomes [MASK2], a uniform
// vocabulary token, or stays, with the configured fractions. Every picked
// token is labeled. Throws ConfigError on an invalid config and
// InvariantError when the example already carries labels.
PretrainExample ApplyMlm(PretrainExample example, const MlmConfig& config,
                         Rng& rng);

// Cuts input and target to the given lengths; labels and spans past the cut
// are dropped or clipped. Both limits must be >= 1.
PretrainExample TruncateExample(PretrainExample example, std::size_t max_input,
                                std::size_t max_target);

}  // namespace gapsent

#endif  // GAPSENT_MASK_H_

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

#include <algorithm>
#include <cmath>
#include <utility>

#include "gapsent/errors.h"

namespace gapsent {

void MlmConfig::Validate() const {
  auto unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!unit(token_select_rate) || !unit(mask_frac) || !unit(random_frac) ||
      !unit(keep_frac)) {
    throw ConfigError("MLM rates must lie in [0, 1]");
  }
  if (std::abs(mask_frac + random_frac + keep_frac - 1.0) > 1e-9) {
    throw ConfigError("MLM mask/random/keep fractions must sum to 1");
  }
  if (random_frac > 0.0 && vocabulary.empty()) {
    throw ConfigError("MLM random replacement needs a non-empty vocabulary");
  }
}

PretrainExample BuildGsgExample(const Document& doc,
                                const SelectionResult& selection,
                                double copy_unchanged_rate, Rng& rng) {
  if (!(copy_unchanged_rate >= 0.0 && copy_unchanged_rate <= 1.0)) {
    throw ConfigError("copy-unchanged rate must lie in [0, 1]");
  }
  const int n = static_cast<int>(doc.sentences.size());
  std::vector<bool> selected(n, false);
  for (int i : selection.selected) {
    if (i < 0 || i >= n) {
      throw InvariantError("selected index " + std::to_string(i) +
                           " out of range for document '" + doc.id + "'");
    }
    selected[i] = true;
  }

  PretrainExample ex;
  ex.id = doc.id;
  ex.selected_indices = selection.selected;
  ex.gsr_used = selection.gsr_used;
  ex.spans.reserve(n);
  for (int i = 0; i < n; ++i) {
    const TokenList& tokens = doc.sentences[i].tokens;
    InputSpan span;
    span.sentence = i;
    span.begin = ex.input_tokens.size();
    if (!selected[i]) {
      span.kind = InputSpan::Kind::kPlain;
      ex.input_tokens.insert(ex.input_tokens.end(), tokens.begin(),
                             tokens.end());
    } else {
      ex.target_tokens.insert(ex.target_tokens.end(), tokens.begin(),
                              tokens.end());
      if (rng.Bernoulli(copy_unchanged_rate)) {
        span.kind = InputSpan::Kind::kCopied;
        ex.copied_indices.push_back(i);
        ex.input_tokens.insert(ex.input_tokens.end(), tokens.begin(),
                               tokens.end());
      } else {
        span.kind = InputSpan::Kind::kMasked;
        ex.input_tokens.emplace_back(kMask1);
      }
    }
    span.end = ex.input_tokens.size();
    ex.spans.push_back(span);
  }
  return ex;
}

PretrainExample ApplyMlm(PretrainExample example, const MlmConfig& config,
                         Rng& rng) {
  config.Validate();
  if (!example.mlm_labels.empty()) {
    throw InvariantError("example '" + example.id +
                         "' already carries MLM labels");
  }
  const double mask_cut = config.mask_frac;
  const double random_cut = config.mask_frac + config.random_frac;
  for (const InputSpan& span : example.spans) {
    if (span.kind != InputSpan::Kind::kPlain) continue;
    for (std::size_t pos = span.begin; pos < span.end; ++pos) {
      if (!rng.Bernoulli(config.token_select_rate)) continue;
      Token& token = example.input_tokens[pos];
      example.mlm_labels.push_back({pos, token});
      const double u = rng.Uniform();
      if (u < mask_cut) {
        token = kMask2;
      } else if (u < random_cut) {
        token = config.vocabulary[rng.UniformInt(config.vocabulary.size())];
      }
    }
  }
  return example;
}

PretrainExample TruncateExample(PretrainExample example, std::size_t max_input,
                                std::size_t max_target) {
  if (max_input < 1 || max_target < 1) {
    throw ConfigError("truncation limits must be >= 1");
  }
  if (example.input_tokens.size() > max_input) {
    example.input_tokens.resize(max_input);
    std::erase_if(example.mlm_labels, [&](const MlmLabel& l) {
      return l.position >= max_input;
    });
    std::erase_if(example.spans,
                  [&](const InputSpan& s) { return s.begin >= max_input; });
    for (InputSpan& s : example.spans) s.end = std::min(s.end, max_input);
  }
  if (example.target_tokens.size() > max_target) {
    example.target_tokens.resize(max_target);
  }
  return example;
}

}  // namespace gapsent

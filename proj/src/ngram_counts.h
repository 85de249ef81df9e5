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

// Hash-keyed n-gram counting shared by the scorers. Keys are the tokens
// joined with a length prefix each, so arbitrary token bytes never collide.

#ifndef GAPSENT_SRC_NGRAM_COUNTS_H_
#define GAPSENT_SRC_NGRAM_COUNTS_H_

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>

#include "gapsent/segment.h"

namespace gapsent::internal {

using NGramCounts = std::unordered_map<std::string, long>;

inline void AppendKeyPart(std::string& key, const Token& token) {
  const auto len = static_cast<std::uint32_t>(token.size());
  key.append(reinterpret_cast<const char*>(&len), sizeof(len));
  key.append(token);
}

inline NGramCounts CountNGrams(std::span<const Token> tokens, int n) {
  NGramCounts counts;
  const auto order = static_cast<std::size_t>(n);
  if (tokens.size() < order) return counts;
  counts.reserve(tokens.size() - order + 1);
  std::string key;
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    key.clear();
    for (std::size_t k = 0; k < order; ++k) AppendKeyPart(key, tokens[i + k]);
    ++counts[key];
  }
  return counts;
}

inline long NGramTotal(std::size_t token_count, int n) {
  const auto order = static_cast<std::size_t>(n);
  return token_count < order ? 0 : static_cast<long>(token_count - order + 1);
}

// Sum over n-grams of min(a, b) (or of [a > 0 && b > 0] when `uniq`).
inline long ClippedOverlap(const NGramCounts& a, const NGramCounts& b,
                           bool uniq) {
  const NGramCounts& small = a.size() <= b.size() ? a : b;
  const NGramCounts& large = a.size() <= b.size() ? b : a;
  long overlap = 0;
  for (const auto& [gram, count] : small) {
    auto it = large.find(gram);
    if (it == large.end()) continue;
    overlap += uniq ? 1 : std::min(count, it->second);
  }
  return overlap;
}

}  // namespace gapsent::internal

#endif  // GAPSENT_SRC_NGRAM_COUNTS_H_

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

// Document model and text segmentation: sentence splitting, ROUGE-style
// token normalization and n-gram extraction.

#ifndef GAPSENT_SEGMENT_H_
#define GAPSENT_SEGMENT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gapsent {

using Token = std::string;
using TokenList = std::vector<Token>;

struct Sentence {
  std::string text;
  // Lowercase ASCII alphanumeric tokens derived from `text`.
  TokenList tokens;

  bool operator==(const Sentence&) const = default;
};

// Builds a sentence whose tokens are NormalizeTokens(text).
Sentence MakeSentence(std::string text);

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  std::optional<std::string> raw_text;

  std::size_t TokenCount() const;
  // All sentence tokens concatenated in document order.
  TokenList Tokens() const;

  bool operator==(const Document&) const = default;
};

// Counting mode for n-grams. kOrig counts duplicates (multiset), kUniq
// counts each distinct n-gram once (set).
enum class NGramMode { kOrig, kUniq };

struct NGramBag {
  int n = 1;
  NGramMode mode = NGramMode::kOrig;
  std::map<TokenList, long> counts;

  long Total() const;
};

// Lowercases `text` and splits it on every maximal run of characters that
// are not ASCII letters or digits. Bytes outside ASCII are separators.
TokenList NormalizeTokens(std::string_view text);

// Byte offsets [begin, end) of each token NormalizeTokens would produce.
std::vector<std::pair<std::size_t, std::size_t>> TokenOffsets(
    std::string_view text);

// Lowercase words (without the trailing period) after which a period never
// ends a sentence: titles, months, common Latin shorthands.
std::vector<std::string> DefaultAbbreviations();

struct SplitterOptions {
  std::vector<std::string> abbreviations = DefaultAbbreviations();
  // Treat a single letter before a period ("J. Smith") as an initial.
  bool single_letter_initials = true;
};

// Rule-based splitter. A boundary follows a run of `.`, `!` or `?`
// (optionally followed by closing quotes or brackets) when the next
// character is whitespace followed by an uppercase ASCII letter, or when
// the run ends the text. Sentence texts are trimmed of surrounding
// whitespace; whitespace-only input yields no sentences.
std::vector<Sentence> SplitSentences(std::string_view text,
                                     const SplitterOptions& options = {});

// Contiguous n-grams of `tokens`. Requires n >= 1.
NGramBag ExtractNGrams(std::span<const Token> tokens, int n, NGramMode mode);

// Keeps whole sentences in order until adding the next one would exceed
// `max_words` tokens; that sentence is cut at the word level and everything
// after it is dropped. Requires max_words >= 1.
Document TruncateWords(const Document& doc, std::size_t max_words);

}  // namespace gapsent

#endif  // GAPSENT_SEGMENT_H_

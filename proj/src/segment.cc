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

#include "gapsent/segment.h"

#include <algorithm>
#include <set>
#include <utility>

#include "gapsent/errors.h"

namespace gapsent {
namespace {

bool IsAsciiAlnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsTerminal(char c) { return c == '.' || c == '!' || c == '?'; }

bool IsCloser(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}';
}

char ToLower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string_view Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && IsSpace(s[b])) ++b;
  while (e > b && IsSpace(s[e - 1])) --e;
  return s.substr(b, e - b);
}

// Lowercased word ending right before position `dot` (exclusive), scanning
// back to the previous whitespace.
std::string WordBefore(std::string_view text, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && !IsSpace(text[b - 1])) --b;
  std::string word;
  for (std::size_t i = b; i < dot; ++i) {
    char c = text[i];
    // Opening punctuation like '(' or '"' is not part of the word.
    if (word.empty() && !IsAsciiAlnum(c)) continue;
    word.push_back(ToLower(c));
  }
  return word;
}

}  // namespace

Sentence MakeSentence(std::string text) {
  Sentence s;
  s.tokens = NormalizeTokens(text);
  s.text = std::move(text);
  return s;
}

std::size_t Document::TokenCount() const {
  std::size_t total = 0;
  for (const Sentence& s : sentences) total += s.tokens.size();
  return total;
}

TokenList Document::Tokens() const {
  TokenList out;
  out.reserve(TokenCount());
  for (const Sentence& s : sentences) {
    out.insert(out.end(), s.tokens.begin(), s.tokens.end());
  }
  return out;
}

long NGramBag::Total() const {
  long total = 0;
  for (const auto& [gram, count] : counts) total += count;
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> TokenOffsets(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> offsets;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsAsciiAlnum(text[i])) {
      ++i;
      continue;
    }
    std::size_t b = i;
    while (i < text.size() && IsAsciiAlnum(text[i])) ++i;
    offsets.emplace_back(b, i);
  }
  return offsets;
}

TokenList NormalizeTokens(std::string_view text) {
  TokenList tokens;
  for (const auto& [b, e] : TokenOffsets(text)) {
    std::string tok(text.substr(b, e - b));
    std::transform(tok.begin(), tok.end(), tok.begin(), ToLower);
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::vector<std::string> DefaultAbbreviations() {
  return {"mr",   "mrs",  "ms",   "dr",   "prof", "sr",   "jr",  "st",
          "mt",   "gen",  "col",  "lt",   "sgt",  "capt", "gov", "sen",
          "rep",  "rev",  "hon",  "pres", "vs",   "e.g",  "i.e", "cf",
          "al",   "inc",  "ltd",  "co",   "corp", "no",   "vol", "fig",
          "jan",  "feb",  "mar",  "apr",  "jun",  "jul",  "aug", "sep",
          "sept", "oct",  "nov",  "dec",  "u.s",  "u.k",  "approx"};
}

std::vector<Sentence> SplitSentences(std::string_view text,
                                     const SplitterOptions& options) {
  const std::set<std::string, std::less<>> abbreviations(
      options.abbreviations.begin(), options.abbreviations.end());
  std::vector<Sentence> sentences;
  auto emit = [&](std::size_t b, std::size_t e) {
    std::string_view piece = Trim(text.substr(b, e - b));
    if (!piece.empty()) sentences.push_back(MakeSentence(std::string(piece)));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsTerminal(text[i])) {
      ++i;
      continue;
    }
    const std::size_t run_begin = i;
    while (i < text.size() && IsTerminal(text[i])) ++i;
    while (i < text.size() && IsCloser(text[i])) ++i;
    const std::size_t run_end = i;

    std::size_t next = run_end;
    while (next < text.size() && IsSpace(text[next])) ++next;
    const bool at_end = next == text.size();
    const bool boundary_shape =
        at_end || (next > run_end && text[next] >= 'A' && text[next] <= 'Z');
    if (!boundary_shape) continue;

    if (!at_end && text[run_begin] == '.' && run_end - run_begin == 1) {
      const std::string word = WordBefore(text, run_begin);
      const bool initial = options.single_letter_initials &&
                           word.size() == 1 && IsAsciiAlnum(word[0]) &&
                           !(word[0] >= '0' && word[0] <= '9');
      if (initial || abbreviations.contains(word)) continue;
    }
    emit(start, run_end);
    start = run_end;
  }
  emit(start, text.size());
  return sentences;
}

NGramBag ExtractNGrams(std::span<const Token> tokens, int n, NGramMode mode) {
  if (n < 1) throw ConfigError("n-gram order must be >= 1");
  NGramBag bag;
  bag.n = n;
  bag.mode = mode;
  const std::size_t order = static_cast<std::size_t>(n);
  if (tokens.size() < order) return bag;
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    TokenList gram(tokens.begin() + i, tokens.begin() + i + order);
    long& count = bag.counts[std::move(gram)];
    count = mode == NGramMode::kUniq ? 1 : count + 1;
  }
  return bag;
}

Document TruncateWords(const Document& doc, std::size_t max_words) {
  if (max_words < 1) throw ConfigError("max_words must be >= 1");
  Document out;
  out.id = doc.id;
  out.raw_text = doc.raw_text;
  std::size_t used = 0;
  for (const Sentence& s : doc.sentences) {
    if (used == max_words) break;
    const std::size_t room = max_words - used;
    if (s.tokens.size() <= room) {
      out.sentences.push_back(s);
      used += s.tokens.size();
      continue;
    }
    // Cut the text right after the last kept token so tokens stay derivable
    // from text.
    const auto offsets = TokenOffsets(s.text);
    Sentence cut;
    cut.tokens.assign(s.tokens.begin(), s.tokens.begin() + room);
    if (offsets.size() >= room) {
      cut.text = s.text.substr(0, offsets[room - 1].second);
    } else {
      // Hand-built sentence whose tokens do not come from its text.
      for (const Token& t : cut.tokens) {
        if (!cut.text.empty()) cut.text.push_back(' ');
        cut.text += t;
      }
    }
    out.sentences.push_back(std::move(cut));
    used = max_words;
  }
  return out;
}

}  // namespace gapsent

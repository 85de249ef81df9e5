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

// Abstractiveness and contamination measures for summarization data.

#ifndef GAPSENT_METRICS_H_
#define GAPSENT_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gapsent/segment.h"

namespace gapsent {

// Extractive fragments shared by an article and its summary.
//   coverage = sum |f| / |S|,  density = sum |f|^2 / |S|
struct FragmentStats {
  std::vector<TokenList> fragments;
  double coverage = 0.0;
  double density = 0.0;
};

// Greedy fragment matching: walk the summary left to right; at each
// position take the longest article substring that matches the summary from
// there (earliest article start on ties), emit it and jump past it, or step
// one token when nothing matches.
FragmentStats ExtractiveFragments(std::span<const Token> article,
                                  std::span<const Token> summary);

struct OverlapTarget {
  std::string id;
  TokenList tokens;
};

struct OverlapEntry {
  std::string id;
  // Max ROUGE-2 recall of the target against any corpus document.
  double max_similarity = 0.0;
};

struct OverlapReport {
  std::vector<OverlapEntry> entries;
  std::vector<double> thresholds;
  // flagged[k] lists ids with max_similarity >= thresholds[k], in target
  // order.
  std::vector<std::vector<std::string>> flagged;

  double OverlapFraction(std::size_t threshold_index) const;
};

// Streams corpus documents against a fixed set of test targets and tracks
// each target's maximum bigram-recall similarity.
//
// The targets are indexed by bigram, so each corpus document costs time
// proportional to its own length plus the postings it hits. With
// `use_index = false` every target is compared to every document directly;
// both paths give identical results.
class OverlapScanner {
 public:
  explicit OverlapScanner(std::vector<OverlapTarget> targets,
                          bool use_index = true);

  void Add(std::span<const Token> corpus_doc);

  // Combines the maxima of another scanner built over the same targets.
  void Merge(const OverlapScanner& other);

  const std::vector<double>& max_similarity() const { return max_; }

  // Throws ConfigError if a threshold lies outside [0, 1].
  OverlapReport Report(std::vector<double> thresholds) const;

 private:
  struct Posting {
    std::size_t target;
    long count;
  };

  std::vector<OverlapTarget> targets_;
  std::vector<long> bigram_totals_;
  std::vector<double> max_;
  bool use_index_;
  std::unordered_map<std::string, std::vector<Posting>> index_;
  // Scratch per Add(); sized to the number of targets.
  std::vector<long> shared_;
  std::vector<std::size_t> touched_;
};

// One-shot helper: flags targets whose similarity to some corpus document is
// >= threshold.
OverlapReport OverlapFilter(std::vector<OverlapTarget> test_targets,
                            std::span<const TokenList> corpus_docs,
                            double threshold);

}  // namespace gapsent

#endif  // GAPSENT_METRICS_H_

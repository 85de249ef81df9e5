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

#include "gapsent/metrics.h"

#include <algorithm>
#include <string_view>

#include "gapsent/errors.h"
#include "gapsent/rouge.h"
#include "ngram_counts.h"

namespace gapsent {

FragmentStats ExtractiveFragments(std::span<const Token> article,
                                  std::span<const Token> summary) {
  // Article positions per token, ascending.
  std::unordered_map<std::string_view, std::vector<std::size_t>> positions;
  for (std::size_t j = 0; j < article.size(); ++j) {
    positions[article[j]].push_back(j);
  }

  FragmentStats stats;
  double covered = 0.0;
  double squared = 0.0;
  std::size_t i = 0;
  while (i < summary.size()) {
    auto it = positions.find(summary[i]);
    std::size_t best_len = 0;
    if (it != positions.end()) {
      for (std::size_t j : it->second) {
        std::size_t len = 0;
        while (i + len < summary.size() && j + len < article.size() &&
               summary[i + len] == article[j + len]) {
          ++len;
        }
        if (len > best_len) best_len = len;
      }
    }
    if (best_len == 0) {
      ++i;
      continue;
    }
    stats.fragments.emplace_back(summary.begin() + i,
                                 summary.begin() + i + best_len);
    covered += static_cast<double>(best_len);
    squared += static_cast<double>(best_len) * static_cast<double>(best_len);
    i += best_len;
  }
  if (!summary.empty()) {
    stats.coverage = covered / static_cast<double>(summary.size());
    stats.density = squared / static_cast<double>(summary.size());
  }
  return stats;
}

double OverlapReport::OverlapFraction(std::size_t threshold_index) const {
  if (entries.empty()) return 0.0;
  return static_cast<double>(flagged.at(threshold_index).size()) /
         static_cast<double>(entries.size());
}

OverlapScanner::OverlapScanner(std::vector<OverlapTarget> targets,
                               bool use_index)
    : targets_(std::move(targets)),
      max_(targets_.size(), 0.0),
      use_index_(use_index),
      shared_(targets_.size(), 0) {
  bigram_totals_.reserve(targets_.size());
  for (std::size_t t = 0; t < targets_.size(); ++t) {
    bigram_totals_.push_back(internal::NGramTotal(targets_[t].tokens.size(), 2));
    if (!use_index_) continue;
    for (auto& [gram, count] : internal::CountNGrams(targets_[t].tokens, 2)) {
      index_[gram].push_back({t, count});
    }
  }
}

void OverlapScanner::Add(std::span<const Token> corpus_doc) {
  if (!use_index_) {
    for (std::size_t t = 0; t < targets_.size(); ++t) {
      max_[t] = std::max(max_[t],
                         Rouge2RecallSimilarity(targets_[t].tokens, corpus_doc));
    }
    return;
  }
  touched_.clear();
  for (const auto& [gram, doc_count] : internal::CountNGrams(corpus_doc, 2)) {
    auto it = index_.find(gram);
    if (it == index_.end()) continue;
    for (const Posting& p : it->second) {
      if (shared_[p.target] == 0) touched_.push_back(p.target);
      shared_[p.target] += std::min(p.count, doc_count);
    }
  }
  for (std::size_t t : touched_) {
    // Same expression as Rouge2RecallSimilarity so both paths agree bitwise.
    const double sim = static_cast<double>(shared_[t]) / bigram_totals_[t];
    max_[t] = std::max(max_[t], sim);
    shared_[t] = 0;
  }
}

void OverlapScanner::Merge(const OverlapScanner& other) {
  if (other.max_.size() != max_.size()) {
    throw InvariantError("merging overlap scanners over different targets");
  }
  for (std::size_t t = 0; t < max_.size(); ++t) {
    max_[t] = std::max(max_[t], other.max_[t]);
  }
}

OverlapReport OverlapScanner::Report(std::vector<double> thresholds) const {
  OverlapReport report;
  for (double th : thresholds) {
    if (!(th >= 0.0 && th <= 1.0)) {
      throw ConfigError("overlap threshold must lie in [0, 1], got " +
                        std::to_string(th));
    }
  }
  report.thresholds = std::move(thresholds);
  report.flagged.resize(report.thresholds.size());
  report.entries.reserve(targets_.size());
  for (std::size_t t = 0; t < targets_.size(); ++t) {
    report.entries.push_back({targets_[t].id, max_[t]});
    for (std::size_t k = 0; k < report.thresholds.size(); ++k) {
      if (max_[t] >= report.thresholds[k]) {
        report.flagged[k].push_back(targets_[t].id);
      }
    }
  }
  return report;
}

OverlapReport OverlapFilter(std::vector<OverlapTarget> test_targets,
                            std::span<const TokenList> corpus_docs,
                            double threshold) {
  OverlapScanner scanner(std::move(test_targets));
  for (const TokenList& doc : corpus_docs) scanner.Add(doc);
  return scanner.Report({threshold});
}

}  // namespace gapsent

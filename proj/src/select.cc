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

#include "gapsent/select.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "gapsent/errors.h"
#include "gapsent/rouge.h"

namespace gapsent {
namespace {

// Unigram statistics of a document with tokens interned to dense ids.
// Scoring a sentence (or a set of sentences) against the rest of the
// document only needs the per-id document totals minus the selected counts,
// so no concatenation is materialized.
struct UnigramTable {
  // Per sentence: (id, count) pairs, one per distinct token.
  std::vector<std::vector<std::pair<int, long>>> sentence_counts;
  std::vector<long> sentence_lengths;
  std::vector<long> totals;  // per id, over the whole document
  long total_tokens = 0;

  explicit UnigramTable(const Document& doc) {
    std::unordered_map<std::string_view, int> ids;
    sentence_counts.reserve(doc.sentences.size());
    for (const Sentence& s : doc.sentences) {
      std::unordered_map<int, long> local;
      for (const Token& t : s.tokens) {
        auto [it, inserted] =
            ids.try_emplace(t, static_cast<int>(ids.size()));
        if (inserted) totals.push_back(0);
        ++totals[it->second];
        ++local[it->second];
      }
      std::vector<std::pair<int, long>> counts(local.begin(), local.end());
      std::sort(counts.begin(), counts.end());
      sentence_counts.push_back(std::move(counts));
      sentence_lengths.push_back(static_cast<long>(s.tokens.size()));
      total_tokens += static_cast<long>(s.tokens.size());
    }
  }

  long Vocabulary() const { return static_cast<long>(totals.size()); }
};

// Running state of the selected set S for the greedy search. Holds the
// counts of S and the ROUGE-1 components of (S, D \ S).
class SelectedSet {
 public:
  SelectedSet(const UnigramTable& table, NGramMode mode)
      : table_(table),
        uniq_(mode == NGramMode::kUniq),
        selected_(table.totals.size(), 0) {
    Refresh();
  }

  // ROUGE-1 F1 between S + {i} and D \ (S + {i}).
  double ScoreWith(int i) const {
    long overlap = overlap_;
    long cand_total;
    long ref_total;
    if (!uniq_) {
      for (const auto& [id, c] : table_.sentence_counts[i]) {
        const long total = table_.totals[id];
        const long before = selected_[id];
        const long after = before + c;
        overlap += std::min(after, total - after) -
                   std::min(before, total - before);
      }
      cand_total = selected_tokens_ + table_.sentence_lengths[i];
      ref_total = table_.total_tokens - cand_total;
    } else {
      cand_total = selected_distinct_;
      ref_total = rest_distinct_;
      for (const auto& [id, c] : table_.sentence_counts[i]) {
        const long total = table_.totals[id];
        const long before = selected_[id];
        const long after = before + c;
        overlap += Shared(after, total) - Shared(before, total);
        if (before == 0) ++cand_total;
        if (total - before > 0 && total - after == 0) --ref_total;
      }
    }
    return ScoreFromCounts(overlap, cand_total, ref_total).f1;
  }

  void Add(int i) {
    for (const auto& [id, c] : table_.sentence_counts[i]) selected_[id] += c;
    selected_tokens_ += table_.sentence_lengths[i];
    Refresh();
  }

 private:
  static long Shared(long in_selected, long total) {
    return in_selected > 0 && total - in_selected > 0 ? 1 : 0;
  }

  void Refresh() {
    overlap_ = 0;
    selected_distinct_ = 0;
    rest_distinct_ = 0;
    for (std::size_t id = 0; id < selected_.size(); ++id) {
      const long total = table_.totals[id];
      const long sel = selected_[id];
      if (uniq_) {
        overlap_ += Shared(sel, total);
        selected_distinct_ += sel > 0 ? 1 : 0;
        rest_distinct_ += total - sel > 0 ? 1 : 0;
      } else {
        overlap_ += std::min(sel, total - sel);
      }
    }
  }

  const UnigramTable& table_;
  bool uniq_;
  std::vector<long> selected_;
  long selected_tokens_ = 0;
  long overlap_ = 0;
  long selected_distinct_ = 0;
  long rest_distinct_ = 0;
};

std::vector<int> TopM(const std::vector<double>& scores, int m) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  order.resize(static_cast<std::size_t>(m));
  std::sort(order.begin(), order.end());
  return order;
}

void CheckSentenceCount(const Document& doc) {
  if (doc.sentences.size() < 2) {
    throw DegenerateDocumentError("document '" + doc.id + "' has " +
                                  std::to_string(doc.sentences.size()) +
                                  " sentence(s); at least 2 are required");
  }
}

SelectionResult SelectSequential(const Document& doc, NGramMode mode, int m) {
  const int n = static_cast<int>(doc.sentences.size());
  const UnigramTable table(doc);
  SelectedSet state(table, mode);
  std::vector<bool> taken(n, false);
  SelectionResult result;
  result.scores.assign(n, 0.0);
  for (int step = 0; step < m; ++step) {
    int best = -1;
    double best_score = 0.0;
    for (int i = 0; i < n; ++i) {
      if (taken[i]) continue;
      const double s = state.ScoreWith(i);
      result.scores[i] = s;
      if (best < 0 || s > best_score) {
        best = i;
        best_score = s;
      }
    }
    taken[best] = true;
    state.Add(best);
    result.selected.push_back(best);
  }
  std::sort(result.selected.begin(), result.selected.end());
  return result;
}

}  // namespace

SelectionStrategy SelectionStrategy::Parse(std::string_view name) {
  if (name == "lead") return {StrategyKind::kLead, NGramMode::kOrig};
  if (name == "random") return {StrategyKind::kRandom, NGramMode::kOrig};
  if (name == "ind-orig") return {StrategyKind::kPrincipalInd, NGramMode::kOrig};
  if (name == "ind-uniq") return {StrategyKind::kPrincipalInd, NGramMode::kUniq};
  if (name == "seq-orig") return {StrategyKind::kPrincipalSeq, NGramMode::kOrig};
  if (name == "seq-uniq") return {StrategyKind::kPrincipalSeq, NGramMode::kUniq};
  throw ConfigError("unknown strategy '" + std::string(name) +
                    "' (expected lead, random, ind-orig, ind-uniq, seq-orig "
                    "or seq-uniq)");
}

std::string SelectionStrategy::Name() const {
  const char* suffix = ngram_mode == NGramMode::kUniq ? "-uniq" : "-orig";
  switch (kind) {
    case StrategyKind::kLead:
      return "lead";
    case StrategyKind::kRandom:
      return "random";
    case StrategyKind::kPrincipalInd:
      return std::string("ind") + suffix;
    case StrategyKind::kPrincipalSeq:
      return std::string("seq") + suffix;
  }
  return "unknown";
}

GsrPolicy GsrPolicy::Fixed(double gsr, double score_noise) {
  GsrPolicy p;
  p.mode = Mode::kFixed;
  p.gsr = gsr;
  p.score_noise = score_noise;
  return p;
}

GsrPolicy GsrPolicy::DynamicUniform(double lo, double hi, double score_noise) {
  GsrPolicy p;
  p.mode = Mode::kDynamicUniform;
  p.lo = lo;
  p.hi = hi;
  p.score_noise = score_noise;
  return p;
}

void GsrPolicy::Validate() const {
  auto open_unit = [](double x) { return x > 0.0 && x < 1.0; };
  if (mode == Mode::kFixed && !open_unit(gsr)) {
    throw ConfigError("gsr must lie in (0, 1), got " + std::to_string(gsr));
  }
  if (mode == Mode::kDynamicUniform &&
      !(open_unit(lo) && open_unit(hi) && lo <= hi)) {
    throw ConfigError("dynamic gsr range must satisfy 0 < lo <= hi < 1, got [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (!(score_noise >= 0.0 && score_noise < 1.0)) {
    throw ConfigError("score noise must lie in [0, 1), got " +
                      std::to_string(score_noise));
  }
}

double GsrPolicy::Draw(Rng& rng) const {
  return mode == Mode::kFixed ? gsr : rng.Uniform(lo, hi);
}

int ComputeM(double gsr, int n) {
  if (n < 2) {
    throw DegenerateDocumentError("cannot select gap sentences from " +
                                  std::to_string(n) + " sentence(s)");
  }
  // The slack makes decimal ratios such as 0.15 * 10 round as the exact
  // product would, whatever the binary representation error.
  const int m = static_cast<int>(std::floor(gsr * n + 0.5 + 1e-9));
  return std::clamp(m, 1, n - 1);
}

std::vector<double> ScoreIndependent(const Document& doc, NGramMode mode) {
  CheckSentenceCount(doc);
  const UnigramTable table(doc);
  std::vector<double> scores;
  scores.reserve(doc.sentences.size());
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    long overlap = 0;
    long cand_total;
    long ref_total;
    if (mode == NGramMode::kOrig) {
      for (const auto& [id, c] : table.sentence_counts[i]) {
        overlap += std::min(c, table.totals[id] - c);
      }
      cand_total = table.sentence_lengths[i];
      ref_total = table.total_tokens - cand_total;
    } else {
      cand_total = static_cast<long>(table.sentence_counts[i].size());
      ref_total = table.Vocabulary();
      for (const auto& [id, c] : table.sentence_counts[i]) {
        const bool in_rest = table.totals[id] - c > 0;
        overlap += in_rest ? 1 : 0;
        if (!in_rest) --ref_total;
      }
    }
    scores.push_back(ScoreFromCounts(overlap, cand_total, ref_total).f1);
  }
  return scores;
}

SelectionResult SelectWithCount(const Document& doc,
                                const SelectionStrategy& strategy, int m,
                                Rng& rng, double score_noise) {
  CheckSentenceCount(doc);
  const int n = static_cast<int>(doc.sentences.size());
  if (m < 1 || m > n - 1) {
    throw ConfigError("gap sentence count " + std::to_string(m) +
                      " outside [1, " + std::to_string(n - 1) + "]");
  }
  if (score_noise != 0.0 && strategy.kind == StrategyKind::kPrincipalSeq) {
    throw ConfigError("score noise is only defined for ind-* strategies");
  }

  SelectionResult result;
  switch (strategy.kind) {
    case StrategyKind::kLead:
      result.selected.resize(m);
      std::iota(result.selected.begin(), result.selected.end(), 0);
      break;
    case StrategyKind::kRandom: {
      std::vector<int> pool(n);
      std::iota(pool.begin(), pool.end(), 0);
      for (int k = 0; k < m; ++k) {
        const auto j = k + static_cast<int>(rng.UniformInt(n - k));
        std::swap(pool[k], pool[j]);
      }
      result.selected.assign(pool.begin(), pool.begin() + m);
      std::sort(result.selected.begin(), result.selected.end());
      break;
    }
    case StrategyKind::kPrincipalInd:
      result.scores = ScoreIndependent(doc, strategy.ngram_mode);
      if (score_noise > 0.0) {
        for (double& s : result.scores) {
          s *= 1.0 + rng.Uniform(-score_noise, score_noise);
        }
      }
      result.selected = TopM(result.scores, m);
      break;
    case StrategyKind::kPrincipalSeq:
      result = SelectSequential(doc, strategy.ngram_mode, m);
      break;
  }
  result.m = m;
  return result;
}

SelectionResult SelectGapSentences(const Document& doc,
                                   const SelectionStrategy& strategy,
                                   const GsrPolicy& policy, Rng& rng) {
  policy.Validate();
  CheckSentenceCount(doc);
  const double gsr = policy.Draw(rng);
  const int m = ComputeM(gsr, static_cast<int>(doc.sentences.size()));
  SelectionResult result =
      SelectWithCount(doc, strategy, m, rng, policy.score_noise);
  result.gsr_used = gsr;
  return result;
}

}  // namespace gapsent

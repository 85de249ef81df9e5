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

// Corpus-level commands over newline-delimited JSON.
//
// Document records are either {"id": str, "text": str} or, to bypass the
// sentence splitter, {"id": str, "sentences": [str, ...]}. Build output
// records are
//
//   {"id", "input": [tok...], "target": [tok...], "selected": [int...],
//    "copied": [int...], "mlm_labels": [[pos, tok]...], "gsr_used": float}
//
// with the sentinels written as "[MASK1]" and "[MASK2]".

#ifndef GAPSENT_PIPELINE_H_
#define GAPSENT_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gapsent/config.h"
#include "gapsent/mask.h"
#include "gapsent/metrics.h"
#include "gapsent/rouge.h"
#include "gapsent/segment.h"

namespace gapsent {

// Parses one document record and drops sentences without tokens. Throws
// InputError on a malformed record.
Document ParseDocumentRecord(std::string_view line,
                             const SplitterOptions& splitter = {});

// Full per-document path used by `build`: optional word truncation,
// selection, masking, MLM and length truncation, with randomness drawn from
// Rng::ForDocument(config.seed, ordinal). Returns nullopt for documents
// with fewer than two sentences. `mlm_vocabulary` is used when config.mlm.
std::optional<PretrainExample> BuildExample(
    const Document& doc, const PipelineConfig& config, std::uint64_t ordinal,
    const std::vector<Token>& mlm_vocabulary = {});

// Serializes an example as one JSON line (without the newline).
std::string ExampleToJson(const PretrainExample& example);

struct BuildSummary {
  std::size_t records = 0;
  std::size_t processed = 0;
  std::size_t skipped_degenerate = 0;
  std::size_t skipped_malformed = 0;
  std::size_t tokens_in = 0;
  std::size_t tokens_out = 0;

  std::string ToJson() const;
};

// Streams `input_path` to `output_path`, one output line per admissible
// document, in input order for any worker count. Malformed lines are counted
// and reported on stderr. Throws IoError when a file cannot be read or
// written and ConfigError on an invalid config.
BuildSummary RunBuild(const std::string& input_path,
                      const std::string& output_path,
                      const PipelineConfig& config);

struct SegmentSummary {
  std::size_t records = 0;
  std::size_t sentences = 0;
  std::size_t skipped_malformed = 0;

  std::string ToJson() const;
};

// Rewrites {"id", "text"} records as {"id", "sentences"} records.
SegmentSummary RunSegment(const std::string& input_path,
                          const std::string& output_path);

struct PairRouge {
  std::string id;
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rouge_l;
};

struct RougeReport {
  std::vector<PairRouge> pairs;
  // Unweighted means of the F1 values.
  double mean_rouge1_f1 = 0.0;
  double mean_rouge2_f1 = 0.0;
  double mean_rouge_l_f1 = 0.0;

  std::string SummaryJson() const;
  // One {"id", "rouge1", "rouge2", "rougeL"} line per pair; each score is
  // {"p", "r", "f"}.
  std::string RowsJsonl() const;
};

// Scores aligned candidate/reference records ({"id", "text"}, or "tokens" /
// "sentences" arrays). Pairs are reported in reference order. Throws
// InputError listing ids present on one side only, or duplicated.
RougeReport RunRouge(const std::string& candidates_path,
                     const std::string& references_path);
RougeReport ScoreRouge(const std::vector<std::pair<std::string, TokenList>>&
                           candidates,
                       const std::vector<std::pair<std::string, TokenList>>&
                           references);

struct StatsReport {
  struct Row {
    std::string id;
    double coverage = 0.0;
    double density = 0.0;
    std::size_t fragments = 0;
  };
  std::vector<Row> rows;
  double mean_coverage = 0.0;
  double median_coverage = 0.0;
  double mean_density = 0.0;
  double median_density = 0.0;

  std::string SummaryJson() const;
  std::string RowsJsonl() const;
};

// Records {"id", "article", "summary"}, each a string or array of strings.
StatsReport RunStats(const std::string& path);

struct OverlapRun {
  OverlapReport report;
  std::size_t corpus_documents = 0;
  std::size_t corpus_malformed = 0;
  // Mean ROUGE F1 of candidates on the full test set and on the examples
  // kept at each threshold; filled when candidates are given.
  std::optional<RougeReport> full;
  std::vector<RougeReport> retained;

  std::string SummaryJson() const;
  // One {"id", "max_similarity", "flagged": {"<threshold>": bool}} line per
  // target.
  std::string RowsJsonl() const;
};

// Compares test targets ({"id", "text"} records) with a streamed corpus in
// the build input format. `candidates_path` may be empty.
OverlapRun RunOverlap(const std::string& targets_path,
                      const std::string& corpus_path,
                      const std::vector<double>& thresholds,
                      int worker_count = 1,
                      const std::string& candidates_path = "");

}  // namespace gapsent

#endif  // GAPSENT_PIPELINE_H_

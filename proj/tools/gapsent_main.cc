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

// gapsent: build gap-sentence pre-training examples and score summaries.
//
// Exit status: 0 success, 1 usage/config/input error, 2 I/O error,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gapsent/config.h"
#include "gapsent/errors.h"
#include "gapsent/pipeline.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInvariant = 3;

// Rows go to a file, or to stdout for "-"; the summary then moves to stderr.
struct Sink {
  std::string rows_path;
  bool summary_json = false;

  void WriteRows(const std::string& rows) const {
    if (rows_path.empty()) return;
    if (rows_path == "-") {
      std::cout << rows;
      return;
    }
    std::ofstream out(rows_path, std::ios::binary | std::ios::trunc);
    if (!out) throw gapsent::IoError("cannot open '" + rows_path + "'");
    out << rows;
    if (!out) throw gapsent::IoError("write to '" + rows_path + "' failed");
  }

  void WriteSummary(const std::string& json, const std::string& human) const {
    std::ostream& os = rows_path == "-" ? std::cerr : std::cout;
    os << (summary_json ? json : human) << '\n';
  }
};

void AddSummaryFlag(CLI::App* cmd, Sink& sink) {
  cmd->add_flag("--summary-json", sink.summary_json,
                "Print the run summary as one JSON object");
  cmd->fallthrough();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gap-sentence pre-training data builder and summary metrics"};
  app.set_version_flag("--version", std::string(GAPSENT_VERSION));
  app.require_subcommand(1);

  // segment
  Sink segment_sink;
  std::string segment_in;
  std::string segment_out;
  CLI::App* segment = app.add_subcommand(
      "segment", "Split {id, text} records into {id, sentences} records");
  segment->add_option("--input", segment_in, "Input JSONL")->required();
  segment->add_option("--output", segment_out, "Output JSONL")->required();
  AddSummaryFlag(segment, segment_sink);

  // build
  Sink build_sink;
  std::string build_in;
  std::string build_out;
  std::string config_path;
  std::map<std::string, std::string> overrides;
  CLI::App* build = app.add_subcommand(
      "build", "Build gap-sentence pre-training examples from documents");
  build->add_option("--input", build_in, "Input JSONL documents")->required();
  build->add_option("--output", build_out, "Output JSONL examples")
      ->required();
  build->add_option("--config", config_path, "JSON config file");
  for (const std::string& key : gapsent::PipelineConfig::Keys()) {
    if (key == "mlm") {
      build->add_flag("--mlm{true}", overrides[key],
                      "Apply token-level masking (--mlm=false disables)");
    } else {
      build->add_option("--" + key, overrides[key],
                        "Override config field '" + key + "'");
    }
  }
  AddSummaryFlag(build, build_sink);

  // rouge
  Sink rouge_sink;
  std::string candidates;
  std::string references;
  CLI::App* rouge =
      app.add_subcommand("rouge", "ROUGE-1/2/L F1 of aligned summaries");
  rouge->add_option("--candidates", candidates, "Candidate JSONL")->required();
  rouge->add_option("--references", references, "Reference JSONL")
      ->required();
  rouge->add_option("--output", rouge_sink.rows_path,
                    "Per-id scores JSONL ('-' for stdout)");
  AddSummaryFlag(rouge, rouge_sink);

  // stats
  Sink stats_sink;
  std::string stats_in;
  CLI::App* stats = app.add_subcommand(
      "stats", "Extractive fragment coverage and density");
  stats->add_option("--input", stats_in, "JSONL {id, article, summary}")
      ->required();
  stats->add_option("--output", stats_sink.rows_path,
                    "Per-id stats JSONL ('-' for stdout)");
  AddSummaryFlag(stats, stats_sink);

  // overlap
  Sink overlap_sink;
  std::string targets;
  std::string corpus;
  std::string overlap_candidates;
  std::vector<double> thresholds;
  int overlap_workers = 1;
  CLI::App* overlap = app.add_subcommand(
      "overlap", "Test-target vs corpus ROUGE-2 recall overlap");
  overlap->add_option("--targets", targets, "Test targets JSONL")->required();
  overlap->add_option("--corpus", corpus, "Corpus JSONL (build input format)")
      ->required();
  overlap->add_option("--threshold", thresholds,
                      "Similarity threshold; repeatable (default 0.8 and 1.0)");
  overlap->add_option("--candidates", overlap_candidates,
                      "Model outputs; reports ROUGE on the retained set");
  overlap->add_option("--worker-count", overlap_workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  overlap->add_option("--output", overlap_sink.rows_path,
                      "Per-target report JSONL ('-' for stdout)");
  AddSummaryFlag(overlap, overlap_sink);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*segment) {
      const auto s = gapsent::RunSegment(segment_in, segment_out);
      segment_sink.WriteSummary(
          s.ToJson(), "segmented " + std::to_string(s.records) +
                          " records into " + std::to_string(s.sentences) +
                          " sentences (" +
                          std::to_string(s.skipped_malformed) + " malformed)");
    } else if (*build) {
      gapsent::PipelineConfig config =
          config_path.empty() ? gapsent::PipelineConfig{}
                              : gapsent::PipelineConfig::FromFile(config_path);
      for (const auto& [key, value] : overrides) {
        if (build->count("--" + key) > 0) config.Set(key, value);
      }
      const auto s = gapsent::RunBuild(build_in, build_out, config);
      build_sink.WriteSummary(
          s.ToJson(),
          "processed " + std::to_string(s.processed) + " of " +
              std::to_string(s.records) + " records (" +
              std::to_string(s.skipped_degenerate) + " degenerate, " +
              std::to_string(s.skipped_malformed) + " malformed); tokens in " +
              std::to_string(s.tokens_in) + ", out " +
              std::to_string(s.tokens_out));
    } else if (*rouge) {
      const auto r = gapsent::RunRouge(candidates, references);
      rouge_sink.WriteRows(r.RowsJsonl());
      rouge_sink.WriteSummary(
          r.SummaryJson(),
          "pairs " + std::to_string(r.pairs.size()) + "  R1 " +
              std::to_string(r.mean_rouge1_f1) + "  R2 " +
              std::to_string(r.mean_rouge2_f1) + "  RL " +
              std::to_string(r.mean_rouge_l_f1));
    } else if (*stats) {
      const auto r = gapsent::RunStats(stats_in);
      stats_sink.WriteRows(r.RowsJsonl());
      stats_sink.WriteSummary(
          r.SummaryJson(),
          "pairs " + std::to_string(r.rows.size()) + "  coverage mean " +
              std::to_string(r.mean_coverage) + " median " +
              std::to_string(r.median_coverage) + "  density mean " +
              std::to_string(r.mean_density) + " median " +
              std::to_string(r.median_density));
    } else if (*overlap) {
      if (thresholds.empty()) thresholds = {0.8, 1.0};
      const auto r = gapsent::RunOverlap(targets, corpus, thresholds,
                                         overlap_workers, overlap_candidates);
      overlap_sink.WriteRows(r.RowsJsonl());
      std::string human = "targets " + std::to_string(r.report.entries.size()) +
                          ", corpus documents " +
                          std::to_string(r.corpus_documents);
      for (std::size_t k = 0; k < r.report.thresholds.size(); ++k) {
        human += "\n  threshold " + std::to_string(r.report.thresholds[k]) +
                 ": flagged " + std::to_string(r.report.flagged[k].size()) +
                 " (" + std::to_string(100.0 * r.report.OverlapFraction(k)) +
                 "%)";
      }
      overlap_sink.WriteSummary(r.SummaryJson(), human);
    }
  } catch (const gapsent::IoError& e) {
    std::cerr << "gapsent: " << e.what() << '\n';
    return kExitIo;
  } catch (const gapsent::InvariantError& e) {
    std::cerr << "gapsent: internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const gapsent::Error& e) {
    std::cerr << "gapsent: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "gapsent: internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return 0;
}

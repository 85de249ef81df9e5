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

#include "gapsent/pipeline.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "gapsent/errors.h"
#include "gapsent/random.h"
#include "gapsent/select.h"
#include "json.hpp"

namespace gapsent {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Lines read and processed per round. Bounds memory independently of corpus
// size.
constexpr std::size_t kBatchLines = 4096;

std::string Dump(const ordered_json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void CheckWritten(const std::ofstream& out, const std::string& path) {
  if (!out) throw IoError("write to '" + path + "' failed");
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

json ParseObject(std::string_view line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw InputError("record is not a JSON object");
  }
  return j;
}

std::string RecordId(const json& j) {
  auto it = j.find("id");
  if (it == j.end() || !it->is_string()) {
    throw InputError("record has no string \"id\"");
  }
  return it->get<std::string>();
}

// A string, or an array of strings whose tokens are concatenated.
TokenList TokensOfValue(const json& v, std::string_view field) {
  if (v.is_string()) return NormalizeTokens(v.get_ref<const std::string&>());
  if (!v.is_array()) {
    throw InputError("\"" + std::string(field) +
                     "\" must be a string or an array of strings");
  }
  TokenList out;
  for (const json& piece : v) {
    if (!piece.is_string()) {
      throw InputError("\"" + std::string(field) +
                       "\" must contain only strings");
    }
    TokenList t = NormalizeTokens(piece.get_ref<const std::string&>());
    out.insert(out.end(), std::make_move_iterator(t.begin()),
               std::make_move_iterator(t.end()));
  }
  return out;
}

TokenList TokensOfRecord(const json& j) {
  for (const char* field : {"tokens", "sentences", "text"}) {
    auto it = j.find(field);
    if (it != j.end()) return TokensOfValue(*it, field);
  }
  throw InputError("record has none of \"tokens\", \"sentences\", \"text\"");
}

using IdTokens = std::vector<std::pair<std::string, TokenList>>;

IdTokens ReadIdTokens(const std::string& path) {
  std::ifstream in = OpenInput(path);
  IdTokens out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    try {
      json j = ParseObject(line);
      out.emplace_back(RecordId(j), TokensOfRecord(j));
    } catch (const InputError& e) {
      throw InputError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (in.bad()) throw IoError("read from '" + path + "' failed");
  return out;
}

// Runs fn(i) for i in [0, count) on `workers` threads.
template <typename Fn>
void ParallelFor(std::size_t count, int workers, Fn&& fn) {
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    constexpr std::size_t kChunk = 16;
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= count) return;
      const std::size_t end = std::min(count, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::jthread> threads;
  const int spawned = std::min<int>(workers, static_cast<int>(count)) - 1;
  threads.reserve(spawned);
  for (int t = 0; t < spawned; ++t) threads.emplace_back(loop);
  loop();
}

// Reads up to kBatchLines lines; returns false at end of input.
bool ReadBatch(std::ifstream& in, const std::string& path,
               std::vector<std::string>& lines) {
  lines.clear();
  std::string line;
  while (lines.size() < kBatchLines && std::getline(in, line)) {
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw IoError("read from '" + path + "' failed");
  return !lines.empty();
}

std::vector<Token> LoadVocabulary(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::vector<Token> vocab;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) vocab.push_back(line);
  }
  if (in.bad()) throw IoError("read from '" + path + "' failed");
  return vocab;
}

std::vector<Token> CorpusVocabulary(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::set<Token> vocab;
  std::string line;
  while (std::getline(in, line)) {
    if (IsBlank(line)) continue;
    try {
      for (const Sentence& s : ParseDocumentRecord(line).sentences) {
        vocab.insert(s.tokens.begin(), s.tokens.end());
      }
    } catch (const InputError&) {
      // Counted as malformed by the main pass.
    }
  }
  if (in.bad()) throw IoError("read from '" + path + "' failed");
  return {vocab.begin(), vocab.end()};
}

void CheckExample(const PretrainExample& ex) {
  if (ex.input_tokens.empty() || ex.target_tokens.empty()) {
    throw InvariantError("example '" + ex.id + "' has an empty input or target");
  }
  for (const Token& t : ex.target_tokens) {
    if (t == kMask1 || t == kMask2) {
      throw InvariantError("example '" + ex.id + "' has a sentinel in target");
    }
  }
  for (const MlmLabel& l : ex.mlm_labels) {
    if (l.position >= ex.input_tokens.size()) {
      throw InvariantError("example '" + ex.id + "' has a label past input");
    }
  }
}

ordered_json ScoreJson(const RougeScore& s) {
  ordered_json j;
  j["p"] = s.precision;
  j["r"] = s.recall;
  j["f"] = s.f1;
  return j;
}

void FillMeans(RougeReport& report) {
  report.mean_rouge1_f1 = report.mean_rouge2_f1 = report.mean_rouge_l_f1 = 0;
  if (report.pairs.empty()) return;
  for (const PairRouge& p : report.pairs) {
    report.mean_rouge1_f1 += p.rouge1.f1;
    report.mean_rouge2_f1 += p.rouge2.f1;
    report.mean_rouge_l_f1 += p.rouge_l.f1;
  }
  const auto n = static_cast<double>(report.pairs.size());
  report.mean_rouge1_f1 /= n;
  report.mean_rouge2_f1 /= n;
  report.mean_rouge_l_f1 /= n;
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

std::string ThresholdKey(double threshold) { return json(threshold).dump(); }

}  // namespace

Document ParseDocumentRecord(std::string_view line,
                             const SplitterOptions& splitter) {
  const json j = ParseObject(line);
  Document doc;
  doc.id = RecordId(j);
  if (auto it = j.find("sentences"); it != j.end()) {
    if (!it->is_array()) throw InputError("\"sentences\" must be an array");
    for (const json& s : *it) {
      if (!s.is_string()) {
        throw InputError("\"sentences\" must contain only strings");
      }
      doc.sentences.push_back(MakeSentence(s.get<std::string>()));
    }
  } else if (auto text = j.find("text"); text != j.end()) {
    if (!text->is_string()) throw InputError("\"text\" must be a string");
    doc.raw_text = text->get<std::string>();
    doc.sentences = SplitSentences(*doc.raw_text, splitter);
  } else {
    throw InputError("record has neither \"text\" nor \"sentences\"");
  }
  std::erase_if(doc.sentences,
                [](const Sentence& s) { return s.tokens.empty(); });
  return doc;
}

std::optional<PretrainExample> BuildExample(
    const Document& doc, const PipelineConfig& config, std::uint64_t ordinal,
    const std::vector<Token>& mlm_vocabulary) {
  const Document truncated =
      config.max_words > 0 ? TruncateWords(doc, config.max_words) : doc;
  if (truncated.sentences.size() < 2) return std::nullopt;

  Rng rng = Rng::ForDocument(config.seed, ordinal);
  const SelectionResult selection = SelectGapSentences(
      truncated, config.Strategy(), config.Policy(), rng);
  PretrainExample ex =
      BuildGsgExample(truncated, selection, config.copy_unchanged_rate, rng);
  if (config.mlm) {
    MlmConfig mlm = config.Mlm();
    mlm.vocabulary = mlm_vocabulary;
    ex = ApplyMlm(std::move(ex), mlm, rng);
  }
  return TruncateExample(std::move(ex), config.max_input, config.max_target);
}

std::string ExampleToJson(const PretrainExample& ex) {
  ordered_json j;
  j["id"] = ex.id;
  j["input"] = ex.input_tokens;
  j["target"] = ex.target_tokens;
  j["selected"] = ex.selected_indices;
  j["copied"] = ex.copied_indices;
  ordered_json labels = ordered_json::array();
  for (const MlmLabel& l : ex.mlm_labels) {
    labels.push_back(ordered_json::array({l.position, l.original}));
  }
  j["mlm_labels"] = std::move(labels);
  j["gsr_used"] = ex.gsr_used;
  return Dump(j);
}

std::string BuildSummary::ToJson() const {
  ordered_json j;
  j["records"] = records;
  j["processed"] = processed;
  j["skipped_degenerate"] = skipped_degenerate;
  j["skipped_malformed"] = skipped_malformed;
  j["tokens_in"] = tokens_in;
  j["tokens_out"] = tokens_out;
  return Dump(j);
}

BuildSummary RunBuild(const std::string& input_path,
                      const std::string& output_path,
                      const PipelineConfig& config) {
  config.Validate();
  std::vector<Token> vocabulary;
  if (config.mlm && config.mlm_random_frac > 0.0) {
    vocabulary = config.mlm_vocab_file.empty()
                     ? CorpusVocabulary(input_path)
                     : LoadVocabulary(config.mlm_vocab_file);
    if (vocabulary.empty()) {
      throw ConfigError("MLM random replacement needs a non-empty vocabulary");
    }
  }

  std::ifstream in = OpenInput(input_path);
  std::ofstream out = OpenOutput(output_path);

  struct Outcome {
    enum class Kind { kBlank, kWritten, kDegenerate, kMalformed } kind;
    std::string text;
    std::size_t tokens_in = 0;
    std::size_t tokens_out = 0;
    std::exception_ptr error;
  };

  BuildSummary summary;
  std::vector<std::string> lines;
  std::vector<Outcome> outcomes;
  std::uint64_t first_ordinal = 0;
  while (ReadBatch(in, input_path, lines)) {
    outcomes.assign(lines.size(), Outcome{});
    ParallelFor(lines.size(), config.worker_count, [&](std::size_t i) {
      Outcome& o = outcomes[i];
      if (IsBlank(lines[i])) {
        o.kind = Outcome::Kind::kBlank;
        return;
      }
      try {
        const Document doc = ParseDocumentRecord(lines[i]);
        auto ex = BuildExample(doc, config, first_ordinal + i, vocabulary);
        if (!ex) {
          o.kind = Outcome::Kind::kDegenerate;
          return;
        }
        CheckExample(*ex);
        o.kind = Outcome::Kind::kWritten;
        o.tokens_in = config.max_words > 0
                          ? std::min(doc.TokenCount(), config.max_words)
                          : doc.TokenCount();
        o.tokens_out = ex->input_tokens.size() + ex->target_tokens.size();
        o.text = ExampleToJson(*ex);
      } catch (const InputError& e) {
        o.kind = Outcome::Kind::kMalformed;
        o.text = e.what();
      } catch (...) {
        o.error = std::current_exception();
      }
    });
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      Outcome& o = outcomes[i];
      if (o.error) std::rethrow_exception(o.error);
      if (o.kind == Outcome::Kind::kBlank) continue;
      ++summary.records;
      switch (o.kind) {
        case Outcome::Kind::kWritten:
          out << o.text << '\n';
          ++summary.processed;
          summary.tokens_in += o.tokens_in;
          summary.tokens_out += o.tokens_out;
          break;
        case Outcome::Kind::kDegenerate:
          ++summary.skipped_degenerate;
          break;
        case Outcome::Kind::kMalformed:
          ++summary.skipped_malformed;
          std::cerr << input_path << ":" << first_ordinal + i + 1
                    << ": skipping malformed record: " << o.text << '\n';
          break;
        case Outcome::Kind::kBlank:
          break;
      }
    }
    CheckWritten(out, output_path);
    first_ordinal += lines.size();
  }
  out.flush();
  CheckWritten(out, output_path);
  return summary;
}

std::string SegmentSummary::ToJson() const {
  ordered_json j;
  j["records"] = records;
  j["sentences"] = sentences;
  j["skipped_malformed"] = skipped_malformed;
  return Dump(j);
}

SegmentSummary RunSegment(const std::string& input_path,
                          const std::string& output_path) {
  std::ifstream in = OpenInput(input_path);
  std::ofstream out = OpenOutput(output_path);
  SegmentSummary summary;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    ++summary.records;
    try {
      const json j = ParseObject(line);
      ordered_json rec;
      rec["id"] = RecordId(j);
      std::vector<std::string> texts;
      if (auto it = j.find("text"); it != j.end() && it->is_string()) {
        for (Sentence& s : SplitSentences(it->get<std::string>())) {
          texts.push_back(std::move(s.text));
        }
      } else if (auto s = j.find("sentences"); s != j.end()) {
        for (const Sentence& sent : ParseDocumentRecord(line).sentences) {
          texts.push_back(sent.text);
        }
      } else {
        throw InputError("record has no string \"text\"");
      }
      summary.sentences += texts.size();
      rec["sentences"] = std::move(texts);
      out << Dump(rec) << '\n';
    } catch (const InputError& e) {
      ++summary.skipped_malformed;
      std::cerr << input_path << ":" << line_no
                << ": skipping malformed record: " << e.what() << '\n';
    }
  }
  if (in.bad()) throw IoError("read from '" + input_path + "' failed");
  out.flush();
  CheckWritten(out, output_path);
  return summary;
}

std::string RougeReport::SummaryJson() const {
  ordered_json j;
  j["pairs"] = pairs.size();
  j["rouge1_f1"] = mean_rouge1_f1;
  j["rouge2_f1"] = mean_rouge2_f1;
  j["rougeL_f1"] = mean_rouge_l_f1;
  return Dump(j);
}

std::string RougeReport::RowsJsonl() const {
  std::string out;
  for (const PairRouge& p : pairs) {
    ordered_json j;
    j["id"] = p.id;
    j["rouge1"] = ScoreJson(p.rouge1);
    j["rouge2"] = ScoreJson(p.rouge2);
    j["rougeL"] = ScoreJson(p.rouge_l);
    out += Dump(j);
    out += '\n';
  }
  return out;
}

RougeReport ScoreRouge(const IdTokens& candidates, const IdTokens& references) {
  std::unordered_map<std::string, const TokenList*> by_id;
  std::vector<std::string> problems;
  for (const auto& [id, tokens] : candidates) {
    if (!by_id.emplace(id, &tokens).second) {
      problems.push_back("duplicate candidate id '" + id + "'");
    }
  }
  std::unordered_set<std::string> seen;
  for (const auto& [id, tokens] : references) {
    if (!seen.insert(id).second) {
      problems.push_back("duplicate reference id '" + id + "'");
    } else if (!by_id.contains(id)) {
      problems.push_back("no candidate for id '" + id + "'");
    }
  }
  for (const auto& [id, tokens] : candidates) {
    if (!seen.contains(id)) problems.push_back("no reference for id '" + id + "'");
  }
  if (!problems.empty()) {
    std::string msg = "candidate/reference ids do not align:";
    const std::size_t shown = std::min<std::size_t>(problems.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) msg += "\n  " + problems[i];
    if (shown < problems.size()) {
      msg += "\n  ... and " + std::to_string(problems.size() - shown) + " more";
    }
    throw InputError(msg);
  }

  RougeReport report;
  report.pairs.reserve(references.size());
  for (const auto& [id, ref] : references) {
    const TokenList& cand = *by_id.at(id);
    report.pairs.push_back({id, RougeN(cand, ref, 1), RougeN(cand, ref, 2),
                            RougeL(cand, ref)});
  }
  FillMeans(report);
  return report;
}

RougeReport RunRouge(const std::string& candidates_path,
                     const std::string& references_path) {
  return ScoreRouge(ReadIdTokens(candidates_path),
                    ReadIdTokens(references_path));
}

std::string StatsReport::SummaryJson() const {
  ordered_json j;
  j["pairs"] = rows.size();
  j["mean_coverage"] = mean_coverage;
  j["median_coverage"] = median_coverage;
  j["mean_density"] = mean_density;
  j["median_density"] = median_density;
  return Dump(j);
}

std::string StatsReport::RowsJsonl() const {
  std::string out;
  for (const Row& r : rows) {
    ordered_json j;
    j["id"] = r.id;
    j["coverage"] = r.coverage;
    j["density"] = r.density;
    j["fragments"] = r.fragments;
    out += Dump(j);
    out += '\n';
  }
  return out;
}

StatsReport RunStats(const std::string& path) {
  std::ifstream in = OpenInput(path);
  StatsReport report;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    try {
      const json j = ParseObject(line);
      StatsReport::Row row;
      row.id = RecordId(j);
      auto article = j.find("article");
      auto summary = j.find("summary");
      if (article == j.end() || summary == j.end()) {
        throw InputError("record needs \"article\" and \"summary\"");
      }
      const FragmentStats stats =
          ExtractiveFragments(TokensOfValue(*article, "article"),
                              TokensOfValue(*summary, "summary"));
      row.coverage = stats.coverage;
      row.density = stats.density;
      row.fragments = stats.fragments.size();
      report.rows.push_back(std::move(row));
    } catch (const InputError& e) {
      throw InputError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (in.bad()) throw IoError("read from '" + path + "' failed");

  std::vector<double> coverage;
  std::vector<double> density;
  for (const StatsReport::Row& r : report.rows) {
    coverage.push_back(r.coverage);
    density.push_back(r.density);
  }
  if (!report.rows.empty()) {
    const auto n = static_cast<double>(report.rows.size());
    for (double c : coverage) report.mean_coverage += c;
    for (double d : density) report.mean_density += d;
    report.mean_coverage /= n;
    report.mean_density /= n;
  }
  report.median_coverage = Median(std::move(coverage));
  report.median_density = Median(std::move(density));
  return report;
}

std::string OverlapRun::SummaryJson() const {
  ordered_json j;
  j["targets"] = report.entries.size();
  j["corpus_documents"] = corpus_documents;
  j["corpus_malformed"] = corpus_malformed;
  ordered_json per = ordered_json::array();
  for (std::size_t k = 0; k < report.thresholds.size(); ++k) {
    ordered_json t;
    t["threshold"] = report.thresholds[k];
    t["flagged"] = report.flagged[k].size();
    t["overlap_fraction"] = report.OverlapFraction(k);
    if (full) {
      const RougeReport& kept = retained[k];
      t["retained"] = kept.pairs.size();
      t["rouge1_f1"] = kept.mean_rouge1_f1;
      t["rouge2_f1"] = kept.mean_rouge2_f1;
      t["rougeL_f1"] = kept.mean_rouge_l_f1;
      t["delta_rouge1_f1"] = kept.mean_rouge1_f1 - full->mean_rouge1_f1;
      t["delta_rouge2_f1"] = kept.mean_rouge2_f1 - full->mean_rouge2_f1;
      t["delta_rougeL_f1"] = kept.mean_rouge_l_f1 - full->mean_rouge_l_f1;
    }
    per.push_back(std::move(t));
  }
  j["thresholds"] = std::move(per);
  if (full) {
    j["full"] = ordered_json::parse(full->SummaryJson());
  }
  return Dump(j);
}

std::string OverlapRun::RowsJsonl() const {
  std::string out;
  for (const OverlapEntry& e : report.entries) {
    ordered_json j;
    j["id"] = e.id;
    j["max_similarity"] = e.max_similarity;
    ordered_json flags = ordered_json::object();
    for (double th : report.thresholds) {
      flags[ThresholdKey(th)] = e.max_similarity >= th;
    }
    j["flagged"] = std::move(flags);
    out += Dump(j);
    out += '\n';
  }
  return out;
}

OverlapRun RunOverlap(const std::string& targets_path,
                      const std::string& corpus_path,
                      const std::vector<double>& thresholds, int worker_count,
                      const std::string& candidates_path) {
  if (worker_count < 1) throw ConfigError("worker-count must be >= 1");
  IdTokens raw_targets = ReadIdTokens(targets_path);
  std::vector<OverlapTarget> targets;
  targets.reserve(raw_targets.size());
  for (auto& [id, tokens] : raw_targets) targets.push_back({id, tokens});

  const int workers = worker_count;
  std::vector<OverlapScanner> scanners;
  scanners.reserve(workers);
  scanners.emplace_back(targets);
  // Rejects bad thresholds before the corpus scan.
  scanners.front().Report(thresholds);
  for (int w = 1; w < workers; ++w) scanners.push_back(scanners.front());

  OverlapRun run;
  std::ifstream in = OpenInput(corpus_path);
  std::vector<std::string> lines;
  std::atomic<std::size_t> documents{0};
  std::atomic<std::size_t> malformed{0};
  while (ReadBatch(in, corpus_path, lines)) {
    // Each batch is split into one contiguous slice per scanner.
    const std::size_t slices = static_cast<std::size_t>(workers);
    const std::size_t per = (lines.size() + slices - 1) / slices;
    ParallelFor(slices, workers, [&](std::size_t w) {
      OverlapScanner& scanner = scanners[w];
      const std::size_t begin = w * per;
      const std::size_t end = std::min(lines.size(), begin + per);
      for (std::size_t i = begin; i < end; ++i) {
        if (IsBlank(lines[i])) continue;
        try {
          scanner.Add(ParseDocumentRecord(lines[i]).Tokens());
          ++documents;
        } catch (const InputError&) {
          ++malformed;
        }
      }
    });
  }
  for (int w = 1; w < workers; ++w) scanners.front().Merge(scanners[w]);
  run.report = scanners.front().Report(thresholds);
  run.corpus_documents = documents;
  run.corpus_malformed = malformed;

  if (!candidates_path.empty()) {
    RougeReport full = ScoreRouge(ReadIdTokens(candidates_path), raw_targets);
    for (std::size_t k = 0; k < thresholds.size(); ++k) {
      const std::set<std::string> flagged(run.report.flagged[k].begin(),
                                          run.report.flagged[k].end());
      RougeReport kept;
      for (const PairRouge& p : full.pairs) {
        if (!flagged.contains(p.id)) kept.pairs.push_back(p);
      }
      FillMeans(kept);
      run.retained.push_back(std::move(kept));
    }
    run.full = std::move(full);
  }
  return run;
}

}  // namespace gapsent

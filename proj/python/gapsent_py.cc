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


// Python bindings for the core operations. The `gapsent` package wraps this
// module with keyword-friendly helpers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gapsent/config.h"
#include "gapsent/errors.h"
#include "gapsent/mask.h"
#include "gapsent/metrics.h"
#include "gapsent/pipeline.h"
#include "gapsent/rouge.h"
#include "gapsent/segment.h"
#include "gapsent/select.h"

namespace py = pybind11;

namespace gapsent {
namespace {

NGramMode ParseMode(const std::string& mode) {
  if (mode == "orig") return NGramMode::kOrig;
  if (mode == "uniq") return NGramMode::kUniq;
  throw ConfigError("n-gram mode must be 'orig' or 'uniq', got '" + mode + "'");
}

Document FromTexts(const std::vector<std::string>& sentences,
                   const std::string& id) {
  Document doc;
  doc.id = id;
  for (const std::string& s : sentences) doc.sentences.push_back(MakeSentence(s));
  return doc;
}

Document FromTokens(const std::vector<TokenList>& sentences,
                    const std::string& id) {
  Document doc;
  doc.id = id;
  for (const TokenList& tokens : sentences) {
    Sentence s;
    s.tokens = tokens;
    for (const Token& t : tokens) {
      if (!s.text.empty()) s.text += ' ';
      s.text += t;
    }
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

py::dict ExampleDict(const PretrainExample& ex) {
  py::dict d;
  d["id"] = ex.id;
  d["input"] = ex.input_tokens;
  d["target"] = ex.target_tokens;
  d["selected"] = ex.selected_indices;
  d["copied"] = ex.copied_indices;
  py::list labels;
  for (const MlmLabel& l : ex.mlm_labels) {
    labels.append(py::make_tuple(l.position, l.original));
  }
  d["mlm_labels"] = labels;
  d["gsr_used"] = ex.gsr_used;
  return d;
}

py::object Loads(const std::string& json_text) {
  return py::module_::import("json").attr("loads")(json_text);
}

SelectionResult Select(const Document& doc, const std::string& strategy,
                       double gsr, std::optional<double> gsr_min,
                       std::optional<double> gsr_max, double score_noise,
                       std::uint64_t seed) {
  if (gsr_min.has_value() != gsr_max.has_value()) {
    throw ConfigError("gsr_min and gsr_max must be given together");
  }
  const GsrPolicy policy =
      gsr_min ? GsrPolicy::DynamicUniform(*gsr_min, *gsr_max, score_noise)
              : GsrPolicy::Fixed(gsr, score_noise);
  Rng rng(seed);
  return SelectGapSentences(doc, SelectionStrategy::Parse(strategy), policy,
                            rng);
}

}  // namespace
}  // namespace gapsent

PYBIND11_MODULE(_gapsent, m) {
  using namespace gapsent;
  m.doc() = "Gap-sentence pre-training data builder and summary metrics";
  m.attr("__version__") = GAPSENT_VERSION;

  // Translators run newest first, so subclasses are registered after the base.
  const auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ConfigError>(m, "ConfigError", error);
  py::register_exception<InputError>(m, "InputError", error);
  py::register_exception<IoError>(m, "IoError", error);
  py::register_exception<DegenerateDocumentError>(m, "DegenerateDocumentError",
                                                  error);
  py::register_exception<InvariantError>(m, "InvariantError", error);

  m.attr("MASK1") = std::string(kMask1);
  m.attr("MASK2") = std::string(kMask2);

  py::class_<RougeScore>(m, "RougeScore")
      .def_readonly("precision", &RougeScore::precision)
      .def_readonly("recall", &RougeScore::recall)
      .def_readonly("f1", &RougeScore::f1)
      .def("__repr__", [](const RougeScore& s) {
        return "RougeScore(precision=" + std::to_string(s.precision) +
               ", recall=" + std::to_string(s.recall) +
               ", f1=" + std::to_string(s.f1) + ")";
      });

  py::class_<SelectionResult>(m, "SelectionResult")
      .def_readonly("selected", &SelectionResult::selected)
      .def_readonly("scores", &SelectionResult::scores)
      .def_readonly("m", &SelectionResult::m)
      .def_readonly("gsr_used", &SelectionResult::gsr_used);

  py::class_<FragmentStats>(m, "FragmentStats")
      .def_readonly("fragments", &FragmentStats::fragments)
      .def_readonly("coverage", &FragmentStats::coverage)
      .def_readonly("density", &FragmentStats::density);

  m.def("normalize_tokens", &NormalizeTokens, py::arg("text"));
  m.def(
      "split_sentences",
      [](const std::string& text) {
        std::vector<std::string> out;
        for (Sentence& s : SplitSentences(text)) out.push_back(std::move(s.text));
        return out;
      },
      py::arg("text"));
  m.def(
      "extract_ngrams",
      [](const TokenList& tokens, int n, const std::string& mode) {
        py::dict out;
        for (const auto& [gram, count] :
             ExtractNGrams(tokens, n, ParseMode(mode)).counts) {
          out[py::tuple(py::cast(gram))] = count;
        }
        return out;
      },
      py::arg("tokens"), py::arg("n"), py::arg("mode") = "orig");

  m.def(
      "rouge_n",
      [](const TokenList& cand, const TokenList& ref, int n,
         const std::string& mode) { return RougeN(cand, ref, n, ParseMode(mode)); },
      py::arg("candidate"), py::arg("reference"), py::arg("n"),
      py::arg("mode") = "orig");
  m.def(
      "rouge_l",
      [](const TokenList& cand, const TokenList& ref) { return RougeL(cand, ref); },
      py::arg("candidate"), py::arg("reference"));
  m.def(
      "rouge2_recall_similarity",
      [](const TokenList& target, const TokenList& doc) {
        return Rouge2RecallSimilarity(target, doc);
      },
      py::arg("target"), py::arg("document"));

  m.def("compute_m", &ComputeM, py::arg("gsr"), py::arg("n"));

  // Sentences are given either as token lists or as raw sentence strings.
  m.def(
      "score_independent",
      [](const std::vector<TokenList>& sentences, const std::string& mode) {
        return ScoreIndependent(FromTokens(sentences, ""), ParseMode(mode));
      },
      py::arg("sentences"), py::arg("mode") = "orig");
  m.def(
      "score_independent",
      [](const std::vector<std::string>& sentences, const std::string& mode) {
        return ScoreIndependent(FromTexts(sentences, ""), ParseMode(mode));
      },
      py::arg("sentences"), py::arg("mode") = "orig");

  m.def(
      "select_gap_sentences",
      [](const std::vector<TokenList>& sentences, const std::string& strategy,
         double gsr, std::optional<double> gsr_min,
         std::optional<double> gsr_max, double score_noise,
         std::uint64_t seed) {
        return Select(FromTokens(sentences, ""), strategy, gsr, gsr_min,
                            gsr_max, score_noise, seed);
      },
      py::arg("sentences"), py::arg("strategy") = "ind-orig",
      py::arg("gsr") = 0.3, py::arg("gsr_min") = py::none(),
      py::arg("gsr_max") = py::none(), py::arg("score_noise") = 0.0,
      py::arg("seed") = 0);
  m.def(
      "select_gap_sentences",
      [](const std::vector<std::string>& sentences, const std::string& strategy,
         double gsr, std::optional<double> gsr_min,
         std::optional<double> gsr_max, double score_noise,
         std::uint64_t seed) {
        return Select(FromTexts(sentences, ""), strategy, gsr, gsr_min,
                            gsr_max, score_noise, seed);
      },
      py::arg("sentences"), py::arg("strategy") = "ind-orig",
      py::arg("gsr") = 0.3, py::arg("gsr_min") = py::none(),
      py::arg("gsr_max") = py::none(), py::arg("score_noise") = 0.0,
      py::arg("seed") = 0);

  // Full per-document path of `build`; returns None for degenerate documents.
  m.def(
      "build_example",
      [](const std::vector<std::string>& sentences, const std::string& config_json,
         std::uint64_t ordinal, const std::string& id,
         const std::vector<Token>& mlm_vocabulary) -> py::object {
        const PipelineConfig config = PipelineConfig::FromJsonText(config_json);
        config.Validate();
        Document doc = FromTexts(sentences, id);
        std::erase_if(doc.sentences,
                      [](const Sentence& s) { return s.tokens.empty(); });
        std::vector<Token> vocabulary = mlm_vocabulary;
        if (config.mlm && vocabulary.empty()) {
          // Without a vocabulary, fall back to the document's own tokens.
          const TokenList tokens = doc.Tokens();
          const std::set<Token> distinct(tokens.begin(), tokens.end());
          vocabulary.assign(distinct.begin(), distinct.end());
        }
        auto ex = BuildExample(doc, config, ordinal, vocabulary);
        if (!ex) return py::none();
        return ExampleDict(*ex);
      },
      py::arg("sentences"), py::arg("config_json") = "{}",
      py::arg("ordinal") = 0, py::arg("id") = "",
      py::arg("mlm_vocabulary") = std::vector<Token>{});

  m.def(
      "extractive_fragments",
      [](const TokenList& article, const TokenList& summary) {
        return ExtractiveFragments(article, summary);
      },
      py::arg("article"), py::arg("summary"));
  m.def(
      "overlap_similarities",
      [](const std::vector<std::pair<std::string, TokenList>>& targets,
         const std::vector<TokenList>& corpus) {
        std::vector<OverlapTarget> t;
        for (const auto& [id, tokens] : targets) t.push_back({id, tokens});
        OverlapScanner scanner(std::move(t));
        for (const TokenList& doc : corpus) scanner.Add(doc);
        return scanner.max_similarity();
      },
      py::arg("targets"), py::arg("corpus"));

  // File-level commands; each returns its summary as a dict.
  m.def(
      "run_build",
      [](const std::string& input, const std::string& output,
         const std::string& config_json) {
        const PipelineConfig config = PipelineConfig::FromJsonText(config_json);
        BuildSummary s;
        {
          py::gil_scoped_release release;
          s = RunBuild(input, output, config);
        }
        return Loads(s.ToJson());
      },
      py::arg("input"), py::arg("output"), py::arg("config_json") = "{}");
  m.def(
      "run_segment",
      [](const std::string& input, const std::string& output) {
        return Loads(RunSegment(input, output).ToJson());
      },
      py::arg("input"), py::arg("output"));
  m.def(
      "run_rouge",
      [](const std::string& candidates, const std::string& references) {
        const RougeReport r = RunRouge(candidates, references);
        py::dict out = Loads(r.SummaryJson());
        out["rows"] = py::list();
        for (const PairRouge& p : r.pairs) {
          py::dict row;
          row["id"] = p.id;
          row["rouge1"] = p.rouge1;
          row["rouge2"] = p.rouge2;
          row["rougeL"] = p.rouge_l;
          out["rows"].cast<py::list>().append(row);
        }
        return out;
      },
      py::arg("candidates"), py::arg("references"));
  m.def(
      "run_stats",
      [](const std::string& input) { return Loads(RunStats(input).SummaryJson()); },
      py::arg("input"));
  m.def(
      "run_overlap",
      [](const std::string& targets, const std::string& corpus,
         const std::vector<double>& thresholds, int worker_count,
         const std::string& candidates) {
        OverlapRun run;
        {
          py::gil_scoped_release release;
          run = RunOverlap(targets, corpus, thresholds, worker_count, candidates);
        }
        return Loads(run.SummaryJson());
      },
      py::arg("targets"), py::arg("corpus"),
      py::arg("thresholds") = std::vector<double>{0.8, 1.0},
      py::arg("worker_count") = 1, py::arg("candidates") = "");
}

# Copyright 2026 The Gapsent Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Gap-sentence pre-training data builder and summary metrics."""

import json

from gapsent._gapsent import (
    MASK1,
    MASK2,
    ConfigError,
    DegenerateDocumentError,
    Error,
    FragmentStats,
    InputError,
    InvariantError,
    IoError,
    RougeScore,
    SelectionResult,
    __version__,
    compute_m,
    extract_ngrams,
    extractive_fragments,
    normalize_tokens,
    overlap_similarities,
    rouge2_recall_similarity,
    rouge_l,
    rouge_n,
    run_overlap,
    run_rouge,
    run_segment,
    run_stats,
    score_independent,
    select_gap_sentences,
    split_sentences,
)
from gapsent import _gapsent


def _config_json(config, overrides):
  merged = dict(config or {})
  merged.update(overrides)
  return json.dumps(merged)


def build_example(sentences, config=None, *, ordinal=0, id="",
                  mlm_vocabulary=(), **overrides):
  """Builds one pre-training example from sentence strings.

  `config` and keyword overrides use the build config keys, with either
  kebab-case or snake_case spelling. With MLM on and no `mlm_vocabulary`, the
  document's own distinct tokens serve as the replacement pool. Returns a
  dict, or None when the document has fewer than two sentences.
  """
  return _gapsent.build_example(list(sentences),
                                _config_json(config, overrides), ordinal, id,
                                list(mlm_vocabulary))


def run_build(input, output, config=None, **overrides):
  """Runs `build` over a JSONL file and returns the summary dict."""
  return _gapsent.run_build(str(input), str(output),
                            _config_json(config, overrides))


__all__ = [
    "MASK1", "MASK2", "ConfigError", "DegenerateDocumentError", "Error",
    "FragmentStats", "InputError", "InvariantError", "IoError", "RougeScore",
    "SelectionResult", "__version__", "build_example", "compute_m",
    "extract_ngrams", "extractive_fragments", "normalize_tokens",
    "overlap_similarities", "rouge2_recall_similarity", "rouge_l", "rouge_n",
    "run_build", "run_overlap", "run_rouge", "run_segment", "run_stats",
    "score_independent", "select_gap_sentences", "split_sentences",
]

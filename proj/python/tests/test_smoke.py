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

"""Smoke tests for the Python bindings."""

import json

import pytest

import gapsent


def test_tokenize_and_split():
  assert gapsent.normalize_tokens("Hello, World!") == ["hello", "world"]
  assert gapsent.split_sentences("Dr. Smith left. He ran.") == [
      "Dr. Smith left.", "He ran."]
  assert gapsent.extract_ngrams(["a", "b", "a", "b"], 2) == {
      ("a", "b"): 2, ("b", "a"): 1}


def test_rouge():
  s = gapsent.rouge_n(["a", "b", "a"], ["a", "a", "c"], 1)
  assert s.f1 == pytest.approx(2 / 3)
  assert gapsent.rouge_n(["a", "b", "a"], ["a", "a", "c"], 1, "uniq").f1 == 0.5
  assert gapsent.rouge_l(["a", "b", "c", "d"], ["a", "c", "b", "d"]).f1 == 0.75
  assert gapsent.rouge2_recall_similarity(["a", "b", "c"],
                                          ["a", "b", "x", "c"]) == 0.5


def test_selection():
  assert gapsent.compute_m(0.3, 10) == 3
  sentences = ["The cat sat.", "The cat sat down.", "Birds fly south."]
  r = gapsent.select_gap_sentences(sentences, "ind-orig", gsr=0.3)
  assert r.m == 1 and len(r.selected) == 1 and len(r.scores) == 3
  lead = gapsent.select_gap_sentences([["a"], ["b"], ["c"], ["d"], ["e"]],
                                      "lead", gsr=0.3)
  assert lead.selected == [0, 1]
  scores = gapsent.score_independent([["a", "b"], ["a", "b"]])
  assert scores == [1.0, 1.0]
  with pytest.raises(gapsent.ConfigError):
    gapsent.select_gap_sentences(sentences, "best")
  with pytest.raises(gapsent.DegenerateDocumentError):
    gapsent.select_gap_sentences(["Only one."], "lead")


def test_build_example():
  sentences = ["Alpha beta gamma.", "Delta epsilon.", "Zeta eta theta."]
  ex = gapsent.build_example(sentences, copy_unchanged_rate=0.0, gsr=0.3,
                             id="d")
  assert ex["id"] == "d"
  assert ex["input"].count(gapsent.MASK1) == 1
  assert ex == gapsent.build_example(sentences, {"copy-unchanged-rate": 0},
                                     id="d")
  assert gapsent.build_example(["Solo sentence."]) is None
  masked = gapsent.build_example(sentences, mlm=True, mlm_rate=1.0, seed=1)
  assert len(masked["mlm_labels"]) > 0
  with pytest.raises(gapsent.ConfigError):
    gapsent.build_example(sentences, bogus=1)


def test_metrics():
  stats = gapsent.extractive_fragments(["a", "b", "c", "d"], ["a", "b", "d"])
  assert stats.fragments == [["a", "b"], ["d"]]
  assert stats.coverage == 1.0
  assert stats.density == pytest.approx(5 / 3)
  sims = gapsent.overlap_similarities([("t", ["a", "b", "c"])],
                                      [["a", "b", "x", "c"]])
  assert sims == [0.5]


def test_file_commands(tmp_path):
  docs = tmp_path / "docs.jsonl"
  docs.write_text(
      json.dumps({"id": "a", "text": "One here. Two here. Three here."}) +
      "\n" + json.dumps({"id": "b", "text": "Lonely."}) + "\n")
  out = tmp_path / "out.jsonl"
  summary = gapsent.run_build(docs, out, seed=3, mlm=True)
  assert summary["processed"] == 1
  assert summary["skipped_degenerate"] == 1
  assert json.loads(out.read_text())["id"] == "a"

  seg = gapsent.run_segment(str(docs), str(tmp_path / "seg.jsonl"))
  assert seg["sentences"] == 4

  r = gapsent.run_rouge(str(docs), str(docs))
  assert r["rouge1_f1"] == 1.0
  assert r["rows"][0]["rouge1"].f1 == 1.0

  ov = gapsent.run_overlap(str(docs), str(docs))
  assert ov["thresholds"][1]["flagged"] == 1

  with pytest.raises(gapsent.IoError):
    gapsent.run_stats(str(tmp_path / "missing.jsonl"))

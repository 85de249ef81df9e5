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

#ifndef GAPSENT_CONFIG_H_
#define GAPSENT_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gapsent/mask.h"
#include "gapsent/select.h"

namespace gapsent {

// Settings for `build`. Every field has a kebab-case key used both in the
// JSON config file and as a command-line flag (`--copy-unchanged-rate 0.2`).
// Snake-case spellings are accepted in JSON as well.
struct PipelineConfig {
  std::string strategy = "ind-orig";             // strategy
  double gsr = 0.3;                              // gsr
  // Setting both switches to a per-document uniform ratio in [min, max].
  std::optional<double> gsr_min;                 // gsr-min
  std::optional<double> gsr_max;                 // gsr-max
  double score_noise = 0.0;                      // score-noise
  double copy_unchanged_rate = 0.2;              // copy-unchanged-rate
  bool mlm = false;                              // mlm
  double mlm_rate = 0.15;                        // mlm-rate
  double mlm_mask_frac = 0.8;                    // mlm-mask-frac
  double mlm_random_frac = 0.1;                  // mlm-random-frac
  double mlm_keep_frac = 0.1;                    // mlm-keep-frac
  // One token per line. Empty: collect the corpus vocabulary in a pre-pass.
  std::string mlm_vocab_file;                    // mlm-vocab-file
  // Word budget applied before selection; 0 disables (400 is the usual
  // choice when enabled).
  std::size_t max_words = 0;                     // max-words
  std::size_t max_input = 512;                   // max-input
  std::size_t max_target = 256;                  // max-target
  std::uint64_t seed = 0;                        // seed
  int worker_count = 1;                          // worker-count

  // All recognized keys, in declaration order.
  static const std::vector<std::string>& Keys();

  // Parses a JSON object; unknown keys and ill-typed values throw
  // ConfigError. Fields not present keep their defaults.
  static PipelineConfig FromJsonText(std::string_view json_text);
  static PipelineConfig FromFile(const std::string& path);

  // Assigns one field from its textual value ("0.3", "ind-orig", "true").
  void Set(std::string_view key, std::string_view value);

  std::string ToJsonText() const;

  // Throws ConfigError on any out-of-range value or unsupported combination
  // (noise with a seq-* strategy, gsr-min without gsr-max, ...).
  void Validate() const;

  SelectionStrategy Strategy() const;
  GsrPolicy Policy() const;
  // Fractions only; the vocabulary is filled in by the pipeline.
  MlmConfig Mlm() const;
};

}  // namespace gapsent

#endif  // GAPSENT_CONFIG_H_

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

#include "gapsent/config.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "gapsent/errors.h"
#include "json.hpp"

namespace gapsent {
namespace {

using nlohmann::json;

std::string Kebab(std::string_view key) {
  std::string out(key);
  std::replace(out.begin(), out.end(), '_', '-');
  return out;
}

double AsNumber(const json& v, std::string_view key) {
  if (!v.is_number()) {
    throw ConfigError("'" + std::string(key) + "' must be a number");
  }
  return v.get<double>();
}

template <typename T>
T AsCount(const json& v, std::string_view key) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError("'" + std::string(key) +
                      "' must be a non-negative integer");
  }
  return static_cast<T>(v.get<unsigned long long>());
}

bool AsBool(const json& v, std::string_view key) {
  if (!v.is_boolean()) {
    throw ConfigError("'" + std::string(key) + "' must be true or false");
  }
  return v.get<bool>();
}

std::string AsString(const json& v, std::string_view key) {
  if (!v.is_string()) {
    throw ConfigError("'" + std::string(key) + "' must be a string");
  }
  return v.get<std::string>();
}

std::optional<double> AsOptionalNumber(const json& v, std::string_view key) {
  if (v.is_null()) return std::nullopt;
  return AsNumber(v, key);
}

struct Field {
  std::string key;
  std::function<void(PipelineConfig&, const json&)> set;
  std::function<json(const PipelineConfig&)> get;
  bool is_string = false;
};

const std::vector<Field>& Fields() {
  using C = PipelineConfig;
  static const std::vector<Field> fields = {
      {"strategy", [](C& c, const json& v) { c.strategy = AsString(v, "strategy"); },
       [](const C& c) { return json(c.strategy); }, true},
      {"gsr", [](C& c, const json& v) { c.gsr = AsNumber(v, "gsr"); },
       [](const C& c) { return json(c.gsr); }},
      {"gsr-min", [](C& c, const json& v) { c.gsr_min = AsOptionalNumber(v, "gsr-min"); },
       [](const C& c) { return c.gsr_min ? json(*c.gsr_min) : json(nullptr); }},
      {"gsr-max", [](C& c, const json& v) { c.gsr_max = AsOptionalNumber(v, "gsr-max"); },
       [](const C& c) { return c.gsr_max ? json(*c.gsr_max) : json(nullptr); }},
      {"score-noise", [](C& c, const json& v) { c.score_noise = AsNumber(v, "score-noise"); },
       [](const C& c) { return json(c.score_noise); }},
      {"copy-unchanged-rate",
       [](C& c, const json& v) { c.copy_unchanged_rate = AsNumber(v, "copy-unchanged-rate"); },
       [](const C& c) { return json(c.copy_unchanged_rate); }},
      {"mlm", [](C& c, const json& v) { c.mlm = AsBool(v, "mlm"); },
       [](const C& c) { return json(c.mlm); }},
      {"mlm-rate", [](C& c, const json& v) { c.mlm_rate = AsNumber(v, "mlm-rate"); },
       [](const C& c) { return json(c.mlm_rate); }},
      {"mlm-mask-frac", [](C& c, const json& v) { c.mlm_mask_frac = AsNumber(v, "mlm-mask-frac"); },
       [](const C& c) { return json(c.mlm_mask_frac); }},
      {"mlm-random-frac",
       [](C& c, const json& v) { c.mlm_random_frac = AsNumber(v, "mlm-random-frac"); },
       [](const C& c) { return json(c.mlm_random_frac); }},
      {"mlm-keep-frac", [](C& c, const json& v) { c.mlm_keep_frac = AsNumber(v, "mlm-keep-frac"); },
       [](const C& c) { return json(c.mlm_keep_frac); }},
      {"mlm-vocab-file",
       [](C& c, const json& v) { c.mlm_vocab_file = AsString(v, "mlm-vocab-file"); },
       [](const C& c) { return json(c.mlm_vocab_file); }, true},
      {"max-words", [](C& c, const json& v) { c.max_words = AsCount<std::size_t>(v, "max-words"); },
       [](const C& c) { return json(c.max_words); }},
      {"max-input", [](C& c, const json& v) { c.max_input = AsCount<std::size_t>(v, "max-input"); },
       [](const C& c) { return json(c.max_input); }},
      {"max-target",
       [](C& c, const json& v) { c.max_target = AsCount<std::size_t>(v, "max-target"); },
       [](const C& c) { return json(c.max_target); }},
      {"seed", [](C& c, const json& v) { c.seed = AsCount<std::uint64_t>(v, "seed"); },
       [](const C& c) { return json(c.seed); }},
      {"worker-count",
       [](C& c, const json& v) { c.worker_count = AsCount<int>(v, "worker-count"); },
       [](const C& c) { return json(c.worker_count); }},
  };
  return fields;
}

const Field& FindField(std::string_view key) {
  const std::string kebab = Kebab(key);
  for (const Field& f : Fields()) {
    if (f.key == kebab) return f;
  }
  throw ConfigError("unknown config key '" + std::string(key) + "'");
}

}  // namespace

const std::vector<std::string>& PipelineConfig::Keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const Field& f : Fields()) out.push_back(f.key);
    return out;
  }();
  return keys;
}

PipelineConfig PipelineConfig::FromJsonText(std::string_view json_text) {
  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ConfigError("config must be a JSON object");
  }
  PipelineConfig config;
  for (const auto& [key, value] : doc.items()) {
    FindField(key).set(config, value);
  }
  return config;
}

PipelineConfig PipelineConfig::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJsonText(buffer.str());
}

void PipelineConfig::Set(std::string_view key, std::string_view value) {
  const Field& field = FindField(key);
  if (field.is_string) {
    field.set(*this, json(std::string(value)));
    return;
  }
  json parsed = json::parse(value, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) {
    throw ConfigError("invalid value '" + std::string(value) + "' for '" +
                      field.key + "'");
  }
  field.set(*this, parsed);
}

std::string PipelineConfig::ToJsonText() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const Field& f : Fields()) out[f.key] = f.get(*this);
  return out.dump();
}

void PipelineConfig::Validate() const {
  const SelectionStrategy parsed = Strategy();
  if (gsr_min.has_value() != gsr_max.has_value()) {
    throw ConfigError("gsr-min and gsr-max must be given together");
  }
  Policy().Validate();
  if (score_noise > 0.0 && parsed.kind == StrategyKind::kPrincipalSeq) {
    throw ConfigError("score-noise is not defined for " + parsed.Name() +
                      "; use an ind-* strategy");
  }
  if (!(copy_unchanged_rate >= 0.0 && copy_unchanged_rate <= 1.0)) {
    throw ConfigError("copy-unchanged-rate must lie in [0, 1]");
  }
  if (mlm) {
    MlmConfig m = Mlm();
    // The vocabulary is supplied later; check the fractions only.
    m.vocabulary = {"x"};
    m.Validate();
  }
  if (max_input < 1 || max_target < 1) {
    throw ConfigError("max-input and max-target must be >= 1");
  }
  if (worker_count < 1) throw ConfigError("worker-count must be >= 1");
}

SelectionStrategy PipelineConfig::Strategy() const {
  return SelectionStrategy::Parse(strategy);
}

GsrPolicy PipelineConfig::Policy() const {
  if (gsr_min && gsr_max) {
    return GsrPolicy::DynamicUniform(*gsr_min, *gsr_max, score_noise);
  }
  return GsrPolicy::Fixed(gsr, score_noise);
}

MlmConfig PipelineConfig::Mlm() const {
  MlmConfig m;
  m.token_select_rate = mlm_rate;
  m.mask_frac = mlm_mask_frac;
  m.random_frac = mlm_random_frac;
  m.keep_frac = mlm_keep_frac;
  return m;
}

}  // namespace gapsent

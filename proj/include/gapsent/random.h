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

#ifndef GAPSENT_RANDOM_H_
#define GAPSENT_RANDOM_H_

#include <cstdint>
#include <random>

namespace gapsent {

// Seeded generator with platform-independent draws. std::mt19937_64 output
// is fully specified by the standard; the standard distributions are not,
// so the conversions below are done by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for the `ordinal`-th document of a run. Depends only
  // on (master_seed, ordinal), never on scheduling.
  static Rng ForDocument(std::uint64_t master_seed, std::uint64_t ordinal);

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform in [0, bound). Requires bound > 0.
  std::uint64_t UniformInt(std::uint64_t bound);

  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gapsent

#endif  // GAPSENT_RANDOM_H_

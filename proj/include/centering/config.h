// Copyright 2026 The Centering Kit Authors.
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

// Parameter bundles that fix one centering instantiation, and their JSON
// form:
//
//   {
//     "utterance_unit": "sentence",
//     "skip_null_utterances": true,
//     "cf_candidate": "cluster_only" | "include_singleton",
//     "weighting": "grammatical_role" | "semantic_role",
//     "aggregator": "max" | "sum",
//     "rng_seed": 42,
//     "recency": {
//       "semiring": "real_plus_times",
//       "forget": {"kind": "zero"}
//               | {"kind": "exponential_decay", "gamma": 0.5}
//               | {"kind": "affine", "a": 1.0, "b": 0.0},
//       "gate": "one" | "membership_indicator"
//     }
//   }
//
// Missing keys take their defaults; unknown keys are rejected.

#ifndef CENTERING_CONFIG_H_
#define CENTERING_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>

namespace centering {

enum class UtteranceUnit { kSentence };
enum class CfCandidate { kClusterOnly, kIncludeSingleton };
enum class Weighting { kGrammaticalRole, kSemanticRole };
enum class Aggregator { kMax, kSum };

enum class Semiring { kRealPlusTimes };
enum class ForgetKind { kZero, kExponentialDecay, kAffine };
enum class Gate { kOne, kMembershipIndicator };

struct ForgetFunction {
  ForgetKind kind = ForgetKind::kZero;
  double gamma = 0.0;  // kExponentialDecay
  double a = 0.0;      // kAffine: x -> sigmoid(a * x + b) * x
  double b = 0.0;

  static ForgetFunction Zero() { return {}; }
  static ForgetFunction Decay(double gamma) {
    return {ForgetKind::kExponentialDecay, gamma, 0.0, 0.0};
  }
  static ForgetFunction Affine(double a, double b) {
    return {ForgetKind::kAffine, 0.0, a, b};
  }

  friend bool operator==(const ForgetFunction &,
                         const ForgetFunction &) = default;
};

struct RecencyConfig {
  Semiring semiring = Semiring::kRealPlusTimes;
  ForgetFunction forget;
  Gate gate = Gate::kMembershipIndicator;

  // Zero forget with the membership gate reproduces plain backward centers.
  static RecencyConfig Vanilla() { return {}; }

  friend bool operator==(const RecencyConfig &,
                         const RecencyConfig &) = default;
};

struct InstantiationConfig {
  UtteranceUnit utterance_unit = UtteranceUnit::kSentence;
  bool skip_null_utterances = true;
  CfCandidate cf_candidate = CfCandidate::kClusterOnly;
  Weighting weighting = Weighting::kGrammaticalRole;
  Aggregator aggregator = Aggregator::kMax;
  std::uint64_t rng_seed = 42;
  std::optional<RecencyConfig> recency;

  friend bool operator==(const InstantiationConfig &,
                         const InstantiationConfig &) = default;
};

// Throws Error(kInvalidArgument) on malformed JSON, unknown keys or values.
InstantiationConfig ConfigFromJson(const std::string &json);
std::string ConfigToJson(const InstantiationConfig &config);

RecencyConfig RecencyFromJson(const std::string &json);
std::string RecencyToJson(const RecencyConfig &config);

}  // namespace centering

#endif  // CENTERING_CONFIG_H_

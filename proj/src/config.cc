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

#include "centering/config.h"

#include <array>
#include <cmath>
#include <set>
#include <utility>

#include "centering/status.h"
#include "json.hpp"

namespace centering {
namespace {

using json = nlohmann::ordered_json;

template <typename E, size_t N>
E EnumFromString(const json &value, const char *key,
                 const std::array<std::pair<const char *, E>, N> &table) {
  if (!value.is_string()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("config key '") + key + "' must be a string");
  }
  const std::string s = value.get<std::string>();
  for (const auto &[name, e] : table) {
    if (s == name) return e;
  }
  throw Error(ErrorCode::kInvalidArgument,
              std::string("unknown value '") + s + "' for config key '" + key +
                  "'");
}

template <typename E, size_t N>
const char *EnumToString(E e,
                         const std::array<std::pair<const char *, E>, N> &table) {
  for (const auto &[name, value] : table) {
    if (value == e) return name;
  }
  return "";
}

constexpr std::array<std::pair<const char *, UtteranceUnit>, 1> kUnits{
    {{"sentence", UtteranceUnit::kSentence}}};
constexpr std::array<std::pair<const char *, CfCandidate>, 2> kCandidates{
    {{"cluster_only", CfCandidate::kClusterOnly},
     {"include_singleton", CfCandidate::kIncludeSingleton}}};
constexpr std::array<std::pair<const char *, Weighting>, 2> kWeightings{
    {{"grammatical_role", Weighting::kGrammaticalRole},
     {"semantic_role", Weighting::kSemanticRole}}};
constexpr std::array<std::pair<const char *, Aggregator>, 2> kAggregators{
    {{"max", Aggregator::kMax}, {"sum", Aggregator::kSum}}};
constexpr std::array<std::pair<const char *, Semiring>, 1> kSemirings{
    {{"real_plus_times", Semiring::kRealPlusTimes}}};
constexpr std::array<std::pair<const char *, ForgetKind>, 3> kForgets{
    {{"zero", ForgetKind::kZero},
     {"exponential_decay", ForgetKind::kExponentialDecay},
     {"affine", ForgetKind::kAffine}}};
constexpr std::array<std::pair<const char *, Gate>, 2> kGates{
    {{"one", Gate::kOne}, {"membership_indicator", Gate::kMembershipIndicator}}};

json Parse(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("config is not valid JSON: ") + e.what());
  }
}

void RejectUnknownKeys(const json &object, std::set<std::string> allowed,
                       const char *where) {
  if (!object.is_object()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(where) + " must be a JSON object");
  }
  for (const auto &item : object.items()) {
    if (!allowed.count(item.key())) {
      throw Error(ErrorCode::kInvalidArgument, "unknown key '" + item.key() +
                                                   "' in " + where);
    }
  }
}

double Number(const json &value, const char *key) {
  if (!value.is_number() || !std::isfinite(value.get<double>())) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("config key '") + key + "' must be a finite number");
  }
  return value.get<double>();
}

RecencyConfig RecencyFromObject(const json &object) {
  RejectUnknownKeys(object, {"semiring", "forget", "gate"}, "recency config");
  RecencyConfig rc;
  if (object.contains("semiring")) {
    rc.semiring = EnumFromString(object["semiring"], "semiring", kSemirings);
  }
  if (object.contains("gate")) {
    rc.gate = EnumFromString(object["gate"], "gate", kGates);
  }
  if (object.contains("forget")) {
    const json &f = object["forget"];
    RejectUnknownKeys(f, {"kind", "gamma", "a", "b"}, "forget function");
    if (!f.contains("kind")) {
      throw Error(ErrorCode::kInvalidArgument, "forget function needs 'kind'");
    }
    rc.forget.kind = EnumFromString(f["kind"], "kind", kForgets);
    if (rc.forget.kind == ForgetKind::kExponentialDecay) {
      if (!f.contains("gamma")) {
        throw Error(ErrorCode::kInvalidArgument,
                    "exponential_decay needs 'gamma'");
      }
      rc.forget.gamma = Number(f["gamma"], "gamma");
      if (rc.forget.gamma < 0.0 || rc.forget.gamma > 1.0) {
        throw Error(ErrorCode::kInvalidArgument, "gamma must lie in [0, 1]");
      }
    } else if (rc.forget.kind == ForgetKind::kAffine) {
      if (f.contains("a")) rc.forget.a = Number(f["a"], "a");
      if (f.contains("b")) rc.forget.b = Number(f["b"], "b");
    }
  }
  return rc;
}

json RecencyToObject(const RecencyConfig &rc) {
  json forget;
  forget["kind"] = EnumToString(rc.forget.kind, kForgets);
  if (rc.forget.kind == ForgetKind::kExponentialDecay) {
    forget["gamma"] = rc.forget.gamma;
  } else if (rc.forget.kind == ForgetKind::kAffine) {
    forget["a"] = rc.forget.a;
    forget["b"] = rc.forget.b;
  }
  json out;
  out["semiring"] = EnumToString(rc.semiring, kSemirings);
  out["forget"] = forget;
  out["gate"] = EnumToString(rc.gate, kGates);
  return out;
}

}  // namespace

InstantiationConfig ConfigFromJson(const std::string &text) {
  json j = Parse(text);
  RejectUnknownKeys(j,
                    {"utterance_unit", "skip_null_utterances", "cf_candidate",
                     "weighting", "aggregator", "rng_seed", "recency"},
                    "config");
  InstantiationConfig config;
  if (j.contains("utterance_unit")) {
    config.utterance_unit =
        EnumFromString(j["utterance_unit"], "utterance_unit", kUnits);
  }
  if (j.contains("skip_null_utterances")) {
    if (!j["skip_null_utterances"].is_boolean()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "config key 'skip_null_utterances' must be a boolean");
    }
    config.skip_null_utterances = j["skip_null_utterances"].get<bool>();
  }
  if (j.contains("cf_candidate")) {
    config.cf_candidate =
        EnumFromString(j["cf_candidate"], "cf_candidate", kCandidates);
  }
  if (j.contains("weighting")) {
    config.weighting = EnumFromString(j["weighting"], "weighting", kWeightings);
  }
  if (j.contains("aggregator")) {
    config.aggregator =
        EnumFromString(j["aggregator"], "aggregator", kAggregators);
  }
  if (j.contains("rng_seed")) {
    if (!j["rng_seed"].is_number_unsigned()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "config key 'rng_seed' must be a non-negative integer");
    }
    config.rng_seed = j["rng_seed"].get<std::uint64_t>();
  }
  if (j.contains("recency") && !j["recency"].is_null()) {
    config.recency = RecencyFromObject(j["recency"]);
  }
  return config;
}

std::string ConfigToJson(const InstantiationConfig &config) {
  json j;
  j["utterance_unit"] = EnumToString(config.utterance_unit, kUnits);
  j["skip_null_utterances"] = config.skip_null_utterances;
  j["cf_candidate"] = EnumToString(config.cf_candidate, kCandidates);
  j["weighting"] = EnumToString(config.weighting, kWeightings);
  j["aggregator"] = EnumToString(config.aggregator, kAggregators);
  j["rng_seed"] = config.rng_seed;
  if (config.recency) j["recency"] = RecencyToObject(*config.recency);
  return j.dump(2);
}

RecencyConfig RecencyFromJson(const std::string &text) {
  return RecencyFromObject(Parse(text));
}

std::string RecencyToJson(const RecencyConfig &config) {
  return RecencyToObject(config).dump(2);
}

}  // namespace centering

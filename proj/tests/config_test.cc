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

#include <gtest/gtest.h>

#include "centering/log.h"
#include "centering/random.h"
#include "centering/status.h"

namespace centering {
namespace {

TEST(ConfigFromJson, EmptyObjectGivesDefaults) {
  InstantiationConfig c = ConfigFromJson("{}");
  EXPECT_EQ(c, InstantiationConfig{});
  EXPECT_TRUE(c.skip_null_utterances);
  EXPECT_EQ(c.cf_candidate, CfCandidate::kClusterOnly);
  EXPECT_EQ(c.weighting, Weighting::kGrammaticalRole);
  EXPECT_EQ(c.aggregator, Aggregator::kMax);
  EXPECT_EQ(c.rng_seed, 42u);
  EXPECT_FALSE(c.recency.has_value());
}

TEST(ConfigFromJson, ReadsEveryField) {
  InstantiationConfig c = ConfigFromJson(R"({
    "utterance_unit": "sentence",
    "skip_null_utterances": false,
    "cf_candidate": "include_singleton",
    "weighting": "semantic_role",
    "aggregator": "sum",
    "rng_seed": 7,
    "recency": {"semiring": "real_plus_times",
                "forget": {"kind": "exponential_decay", "gamma": 0.25},
                "gate": "one"}
  })");
  EXPECT_FALSE(c.skip_null_utterances);
  EXPECT_EQ(c.cf_candidate, CfCandidate::kIncludeSingleton);
  EXPECT_EQ(c.weighting, Weighting::kSemanticRole);
  EXPECT_EQ(c.aggregator, Aggregator::kSum);
  EXPECT_EQ(c.rng_seed, 7u);
  ASSERT_TRUE(c.recency.has_value());
  EXPECT_EQ(c.recency->forget, ForgetFunction::Decay(0.25));
  EXPECT_EQ(c.recency->gate, Gate::kOne);
}

TEST(ConfigJson, RoundTrip) {
  InstantiationConfig c;
  c.aggregator = Aggregator::kSum;
  c.rng_seed = 123456789012345ull;
  for (const RecencyConfig &rc :
       {RecencyConfig::Vanilla(),
        RecencyConfig{Semiring::kRealPlusTimes, ForgetFunction::Decay(0.5),
                      Gate::kOne},
        RecencyConfig{Semiring::kRealPlusTimes,
                      ForgetFunction::Affine(-1.5, 2.0),
                      Gate::kMembershipIndicator}}) {
    c.recency = rc;
    EXPECT_EQ(ConfigFromJson(ConfigToJson(c)), c);
    EXPECT_EQ(RecencyFromJson(RecencyToJson(rc)), rc);
  }
  c.recency.reset();
  EXPECT_EQ(ConfigFromJson(ConfigToJson(c)), c);
}

TEST(ConfigFromJson, Rejections) {
  for (const char *bad : {
           "not json",
           "[]",
           R"({"weighting": "loudness"})",
           R"({"colour": 1})",
           R"({"aggregator": 3})",
           R"({"recency": {"forget": {"kind": "exponential_decay"}}})",
           R"({"recency": {"forget": {"kind": "exponential_decay", "gamma": 1.5}}})",
           R"({"recency": {"forget": {"gamma": 0.5}}})",
           R"({"recency": {"forget": {"kind": "zero", "tau": 1}}})",
           R"({"recency": {"gate": "sometimes"}})",
           R"({"utterance_unit": "clause"})",
       }) {
    try {
      ConfigFromJson(bad);
      ADD_FAILURE() << bad;
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument) << bad;
    }
  }
}

TEST(DeriveSeed, StableAndDistinct) {
  EXPECT_EQ(DeriveSeed(42, "doc:0"), DeriveSeed(42, "doc:0"));
  EXPECT_NE(DeriveSeed(42, "doc:0"), DeriveSeed(42, "doc:1"));
  EXPECT_NE(DeriveSeed(42, "doc:0"), DeriveSeed(43, "doc:0"));
}

TEST(SeededRng, BelowStaysInRange) {
  SeededRng rng(1);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 7000; ++i) ++counts[rng.Below(7)];
  for (int c : counts) EXPECT_GT(c, 800);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.Uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Log, LevelsFilterMessages) {
  std::vector<std::string> seen;
  SetLogSink([&](LogLevel, const std::string &m) { seen.push_back(m); });
  SetLogLevel(LogLevel::kQuiet);
  LogWarning("hidden");
  SetLogLevel(LogLevel::kWarn);
  LogWarning("shown");
  LogInfo("hidden too");
  SetLogSink(nullptr);
  EXPECT_EQ(seen, std::vector<std::string>{"shown"});
}

}  // namespace
}  // namespace centering

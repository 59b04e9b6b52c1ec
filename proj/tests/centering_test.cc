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

#include "centering/centering.h"

#include <gtest/gtest.h>

#include "centering/status.h"
#include "support/synthetic.h"
#include "support/test_util.h"

namespace centering {
namespace {

using testing::DataPath;

constexpr EntityId kJohn = 0;
constexpr EntityId kMike = 4;

std::vector<std::optional<EntityId>> Cps(const std::vector<CenteringFrame> &f) {
  std::vector<std::optional<EntityId>> out;
  for (const auto &frame : f) out.push_back(frame.cp);
  return out;
}

std::vector<std::optional<EntityId>> Cbs(const std::vector<CenteringFrame> &f) {
  std::vector<std::optional<EntityId>> out;
  for (const auto &frame : f) out.push_back(frame.cb);
  return out;
}

std::vector<Transition> Transitions(const std::vector<CenteringFrame> &f) {
  std::vector<Transition> out;
  for (const auto &frame : f) out.push_back(frame.transition);
  return out;
}

class WorkedExample : public ::testing::TestWithParam<InstantiationConfig> {
 protected:
  void SetUp() override {
    doc_ = ParseConllFile(DataPath("john_mike.conll"))[0];
  }
  Document doc_;
};

TEST_P(WorkedExample, CentersAndTransitions) {
  auto frames = RunCentering(BuildDiscourse(doc_), GetParam());
  using O = std::optional<EntityId>;
  EXPECT_EQ(Cps(frames), (std::vector<O>{kJohn, kJohn, kJohn, kMike, kMike}));
  EXPECT_EQ(Cbs(frames),
            (std::vector<O>{std::nullopt, kJohn, kJohn, kJohn, kMike}));
  EXPECT_EQ(Transitions(frames),
            (std::vector<Transition>{Transition::kInitial,
                                     Transition::kContinue,
                                     Transition::kContinue, Transition::kRetain,
                                     Transition::kSmoothShift}));
}

InstantiationConfig With(Weighting w, Aggregator a, CfCandidate c) {
  InstantiationConfig config;
  config.weighting = w;
  config.aggregator = a;
  config.cf_candidate = c;
  return config;
}

INSTANTIATE_TEST_SUITE_P(
    Instantiations, WorkedExample,
    ::testing::Values(
        InstantiationConfig{},
        With(Weighting::kSemanticRole, Aggregator::kMax, CfCandidate::kClusterOnly),
        With(Weighting::kGrammaticalRole, Aggregator::kMax,
             CfCandidate::kIncludeSingleton),
        With(Weighting::kGrammaticalRole, Aggregator::kSum,
             CfCandidate::kClusterOnly)));

TEST(WorkedExampleWeights, ForwardCentersOfFirstUtterance) {
  Document doc = ParseConllFile(DataPath("john_mike.conll"))[0];
  Discourse d = BuildDiscourse(doc);
  InstantiationConfig config;
  CenterList cf = ForwardCenters(d.utterances[0], d.chain_sizes, config);
  // Singletons (trouble, vacation) are not candidates.
  ASSERT_EQ(cf.size(), 1u);
  EXPECT_EQ(cf[0].entity, kJohn);
  EXPECT_EQ(cf[0].weight, 4.0);  // max(subject 3, pronoun object "his" 4)

  config.cf_candidate = CfCandidate::kIncludeSingleton;
  cf = ForwardCenters(d.utterances[0], d.chain_sizes, config);
  ASSERT_EQ(cf.size(), 3u);  // John, trouble, vacation in first-mention order
  EXPECT_EQ(cf[0].entity, kJohn);
  EXPECT_EQ(cf[1].entity, 1);
  EXPECT_EQ(cf[1].weight, 1.0);
  EXPECT_EQ(cf[2].entity, 2);
  EXPECT_EQ(cf[2].weight, 2.0);

  config.aggregator = Aggregator::kSum;
  EXPECT_EQ(EntityWeight(d.utterances[0], kJohn, config.weighting,
                         config.aggregator),
            7.0);
}

TEST(MentionWeight, RankTable) {
  auto role = [](GrammaticalSlot g, bool pronoun,
                 std::optional<SemanticSlot> s = std::nullopt) {
    return RoleLabel{g, pronoun, s};
  };
  const auto G = Weighting::kGrammaticalRole;
  EXPECT_EQ(MentionWeight(role(GrammaticalSlot::kSubject, true), G), 5);
  EXPECT_EQ(MentionWeight(role(GrammaticalSlot::kObject, true), G), 4);
  EXPECT_EQ(MentionWeight(role(GrammaticalSlot::kSubject, false), G), 3);
  EXPECT_EQ(MentionWeight(role(GrammaticalSlot::kObject, false), G), 2);
  EXPECT_EQ(MentionWeight(role(GrammaticalSlot::kOther, false), G), 1);
  EXPECT_EQ(MentionWeight(role(GrammaticalSlot::kOther, true), G), 1);

  const auto S = Weighting::kSemanticRole;
  EXPECT_EQ(MentionWeight(role(GrammaticalSlot::kOther, true, SemanticSlot::kAgent), S), 5);
  EXPECT_EQ(MentionWeight(role(GrammaticalSlot::kOther, true, SemanticSlot::kPatient), S), 4);
  EXPECT_EQ(MentionWeight(role(GrammaticalSlot::kOther, false, SemanticSlot::kAgent), S), 3);
  EXPECT_EQ(MentionWeight(role(GrammaticalSlot::kSubject, false, SemanticSlot::kPatient), S), 2);
  EXPECT_EQ(MentionWeight(role(GrammaticalSlot::kSubject, false, SemanticSlot::kOther), S), 1);
  // No semantic label falls back to the Other rank.
  EXPECT_EQ(MentionWeight(role(GrammaticalSlot::kSubject, false), S), 1);
}

TEST(EntityWeight, AbsentEntityIsAnError) {
  Utterance u;
  EXPECT_THROW(EntityWeight(u, 3, Weighting::kGrammaticalRole, Aggregator::kMax),
               Error);
}

CenterList List(std::initializer_list<std::pair<EntityId, double>> items) {
  CenterList cf;
  int pos = 0;
  for (auto [e, w] : items) {
    cf.push_back({e, w, pos, pos});
    pos += 2;
  }
  return cf;
}

TEST(PreferredCenter, TiesGoToFirstMention) {
  EXPECT_EQ(PreferredCenter(List({{7, 3}, {2, 3}})), 7);
  EXPECT_EQ(PreferredCenter(List({{7, 2}, {2, 3}})), 2);
  EXPECT_EQ(PreferredCenter({}), std::nullopt);
  // Same position: smaller id.
  CenterList same{{9, 1, 0, 0}, {4, 1, 0, 0}};
  EXPECT_EQ(PreferredCenter(same), 4);
}

TEST(BackwardCenter, UsesPreviousRanking) {
  CenterList prev = List({{1, 3}, {2, 5}, {3, 1}});
  EXPECT_EQ(BackwardCenter(prev, List({{1, 5}, {3, 5}})), 1);
  EXPECT_EQ(BackwardCenter(prev, List({{2, 1}, {1, 5}})), 2);
  EXPECT_EQ(BackwardCenter(prev, List({{8, 1}})), std::nullopt);
  EXPECT_EQ(BackwardCenter({}, List({{8, 1}})), std::nullopt);
}

// Independent statement of the transition table.
Transition TableOracle(std::optional<int> prev_cb, std::optional<int> cb,
                       int cp) {
  if (!cb) return Transition::kNocb;
  const bool same = !prev_cb.has_value() || *prev_cb == *cb;
  if (same) return *cb == cp ? Transition::kContinue : Transition::kRetain;
  return *cb == cp ? Transition::kSmoothShift : Transition::kRoughShift;
}

TEST(ClassifyTransition, ExhaustiveTable) {
  const std::optional<int> prevs[] = {std::nullopt, 10, 20};
  int checked = 0;
  for (auto prev : prevs) {
    for (int cb : {10, 20}) {
      for (int cp : {10, 20}) {
        EXPECT_EQ(ClassifyTransition(prev, EntityId{cb}, EntityId{cp}),
                  TableOracle(prev, cb, cp));
        ++checked;
      }
    }
    for (int cp : {10, 20}) {
      EXPECT_EQ(ClassifyTransition(prev, std::nullopt, EntityId{cp}),
                Transition::kNocb);
    }
  }
  EXPECT_EQ(checked, 12);
  EXPECT_EQ(ClassifyTransition(10, 10, 10), Transition::kContinue);
  EXPECT_EQ(ClassifyTransition(10, 10, 20), Transition::kRetain);
  EXPECT_EQ(ClassifyTransition(10, 20, 20), Transition::kSmoothShift);
  EXPECT_EQ(ClassifyTransition(10, 20, 10), Transition::kRoughShift);
  EXPECT_EQ(ClassifyTransition(std::nullopt, 20, 20), Transition::kContinue);
}

TEST(LinkFrames, NullUtterances) {
  std::vector<CenterList> cfs = {{}, List({{1, 3}}), {}, List({{1, 3}})};
  auto skip = LinkFrames(cfs, true);
  EXPECT_FALSE(skip[0].linked);
  EXPECT_EQ(skip[1].transition, Transition::kInitial);
  EXPECT_FALSE(skip[2].linked);
  EXPECT_EQ(skip[3].transition, Transition::kContinue);
  EXPECT_EQ(skip[3].cb, 1);

  auto keep = LinkFrames(cfs, false);
  EXPECT_FALSE(keep[0].linked);  // leading nulls never link
  EXPECT_EQ(keep[1].transition, Transition::kInitial);
  EXPECT_TRUE(keep[2].linked);
  EXPECT_EQ(keep[2].transition, Transition::kNocb);
  EXPECT_EQ(keep[3].transition, Transition::kNocb);
}

TEST(LinkFrames, ScaleInvariance) {
  SeededRng rng(77);
  testing::DiscourseShape shape;
  shape.max_utterances = 8;
  for (int trial = 0; trial < 300; ++trial) {
    Discourse d = testing::RandomDiscourse(rng, shape, "s");
    InstantiationConfig config;
    config.cf_candidate = CfCandidate::kIncludeSingleton;
    auto cfs = AllForwardCenters(d, config);
    const double scale = 0.25 + 10.0 * rng.Uniform();
    auto scaled = cfs;
    for (auto &cf : scaled) {
      for (auto &e : cf) e.weight *= scale;
    }
    auto a = LinkFrames(cfs, true);
    auto b = LinkFrames(scaled, true);
    EXPECT_EQ(Cps(a), Cps(b));
    EXPECT_EQ(Cbs(a), Cbs(b));
    EXPECT_EQ(Transitions(a), Transitions(b));
  }
}

TEST(BuildDiscourse, AlternativeMap) {
  Document doc = ParseConllFile(DataPath("john_mike.conll"))[0];
  std::vector<EntityId> map(doc.mentions.size());
  for (size_t i = 0; i < map.size(); ++i) map[i] = static_cast<EntityId>(i);
  Discourse d = BuildDiscourse(doc, map);
  ASSERT_EQ(d.utterances.size(), 5u);
  for (const auto &[e, n] : d.chain_sizes) EXPECT_EQ(n, 1);
  // Every entity is a singleton, so nothing is a cluster-only candidate.
  for (const auto &cf : AllForwardCenters(d, InstantiationConfig{})) {
    EXPECT_TRUE(cf.empty());
  }
  std::vector<EntityId> short_map(2);
  EXPECT_THROW(BuildDiscourse(doc, short_map), Error);
}

TEST(Transition, Names) {
  EXPECT_STREQ(ToString(Transition::kContinue), "continue");
  EXPECT_STREQ(ToString(Transition::kSmoothShift), "smooth_shift");
  EXPECT_STREQ(ToString(Transition::kNocb), "nocb");
}

}  // namespace
}  // namespace centering

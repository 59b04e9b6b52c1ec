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

// Forward-looking centers, preferred and backward-looking centers, and
// transition labels for a discourse under one InstantiationConfig.
//
// A discourse is a sequence of utterances (sentences). Each mention carries
// the entity it resolves to under the mention->entity map in use, so the same
// document can be analyzed under gold chains or any predicted clustering.

#ifndef CENTERING_CENTERING_H_
#define CENTERING_CENTERING_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centering/config.h"
#include "centering/corpus.h"

namespace centering {

struct UtteranceMention {
  MentionSpan span;
  RoleLabel role;
  EntityId entity = 0;
};

struct Utterance {
  int ordinal = 0;
  int sentence = 0;
  // Sorted by (start, end).
  std::vector<UtteranceMention> mentions;
};

struct Discourse {
  std::string key;
  std::vector<Utterance> utterances;
  // Document-wide mention count per entity under the map in use.
  std::map<EntityId, int> chain_sizes;
};

// Builds the discourse of |doc| with its annotated chains as the map.
Discourse BuildDiscourse(const Document &doc);
// Same, with entity_of_mention[i] replacing doc.mentions[i].chain.
// Throws Error(kInvalidArgument) if the sizes differ.
Discourse BuildDiscourse(const Document &doc,
                         std::span<const EntityId> entity_of_mention);

// One entry of Cf. first_start/first_end locate the entity's earliest mention
// in the utterance and drive tie-breaking.
struct WeightedEntity {
  EntityId entity = 0;
  double weight = 0.0;
  int first_start = 0;
  int first_end = 0;

  friend bool operator==(const WeightedEntity &,
                         const WeightedEntity &) = default;
};

// Forward-looking centers in order of first mention.
using CenterList = std::vector<WeightedEntity>;

const WeightedEntity *FindEntity(const CenterList &cf, EntityId entity);

enum class Transition {
  kContinue,
  kRetain,
  kSmoothShift,
  kRoughShift,
  kNocb,
  kInitial,
};

const char *ToString(Transition t);

struct CenteringFrame {
  int ordinal = 0;
  CenterList cf;
  std::optional<EntityId> cp;
  std::optional<EntityId> cb;
  Transition transition = Transition::kNocb;
  // False for frames left out of utterance linkage (null utterances when
  // they are skipped, and null utterances before the first non-null one).
  bool linked = false;
};

// Rank weights: 5 for a pronoun subject (agent), 4 pronoun object (patient),
// 3 subject (agent), 2 object (patient), 1 otherwise.
double MentionWeight(const RoleLabel &role, Weighting weighting);

// Aggregated weight of |entity| over its mentions in |utterance|.
// Throws Error(kInvalidArgument) if the entity is not realized there.
double EntityWeight(const Utterance &utterance, EntityId entity,
                    Weighting weighting, Aggregator aggregator);

CenterList ForwardCenters(const Utterance &utterance,
                          const std::map<EntityId, int> &chain_sizes,
                          const InstantiationConfig &config);

// Highest weight; ties go to the earliest first mention, then the smaller id.
std::optional<EntityId> PreferredCenter(const CenterList &cf);

// Highest-weighted element of |prev| (by prev's weights) realized in |cur|,
// with PreferredCenter's tie-breaking applied to prev.
std::optional<EntityId> BackwardCenter(const CenterList &prev,
                                       const CenterList &cur);

Transition ClassifyTransition(std::optional<EntityId> prev_cb,
                              std::optional<EntityId> cb,
                              std::optional<EntityId> cp);
Transition ClassifyTransition(const CenteringFrame &prev,
                              const CenteringFrame &cur);

// Links precomputed Cf lists in the given order. ordinal i of the result is
// the i-th list.
std::vector<CenteringFrame> LinkFrames(std::span<const CenterList> cfs,
                                       bool skip_null_utterances);

std::vector<CenteringFrame> RunCentering(const Discourse &discourse,
                                         const InstantiationConfig &config);

// Cf of every utterance, in discourse order.
std::vector<CenterList> AllForwardCenters(const Discourse &discourse,
                                          const InstantiationConfig &config);

}  // namespace centering

#endif  // CENTERING_CENTERING_H_

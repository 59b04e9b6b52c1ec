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

#include <algorithm>

#include "centering/status.h"

namespace centering {
namespace {

// True if |a| outranks |b|.
bool Outranks(const WeightedEntity &a, const WeightedEntity &b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  if (a.first_start != b.first_start) return a.first_start < b.first_start;
  return a.entity < b.entity;
}

}  // namespace

Discourse BuildDiscourse(const Document &doc) {
  std::vector<EntityId> entities;
  entities.reserve(doc.mentions.size());
  for (const MentionSpan &m : doc.mentions) entities.push_back(m.chain);
  return BuildDiscourse(doc, entities);
}

Discourse BuildDiscourse(const Document &doc,
                         std::span<const EntityId> entity_of_mention) {
  if (entity_of_mention.size() != doc.mentions.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "entity map has " + std::to_string(entity_of_mention.size()) +
                    " entries for " + std::to_string(doc.mentions.size()) +
                    " mentions");
  }
  Discourse discourse;
  discourse.key = doc.Key();
  discourse.utterances.resize(doc.sentences.size());
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    discourse.utterances[s].ordinal = static_cast<int>(s);
    discourse.utterances[s].sentence = static_cast<int>(s);
  }
  std::vector<RoleLabel> roles = MentionRoles(doc);
  for (size_t i = 0; i < doc.mentions.size(); ++i) {
    const MentionSpan &m = doc.mentions[i];
    UtteranceMention um;
    um.span = m;
    um.span.chain = entity_of_mention[i];
    um.role = roles[i];
    um.entity = entity_of_mention[i];
    discourse.utterances[m.sentence].mentions.push_back(um);
    ++discourse.chain_sizes[um.entity];
  }
  for (Utterance &u : discourse.utterances) {
    std::stable_sort(u.mentions.begin(), u.mentions.end(),
                     [](const UtteranceMention &a, const UtteranceMention &b) {
                       if (a.span.start != b.span.start)
                         return a.span.start < b.span.start;
                       return a.span.end < b.span.end;
                     });
  }
  return discourse;
}

const WeightedEntity *FindEntity(const CenterList &cf, EntityId entity) {
  for (const WeightedEntity &e : cf) {
    if (e.entity == entity) return &e;
  }
  return nullptr;
}

const char *ToString(Transition t) {
  switch (t) {
    case Transition::kContinue:
      return "continue";
    case Transition::kRetain:
      return "retain";
    case Transition::kSmoothShift:
      return "smooth_shift";
    case Transition::kRoughShift:
      return "rough_shift";
    case Transition::kNocb:
      return "nocb";
    case Transition::kInitial:
      return "initial";
  }
  return "";
}

double MentionWeight(const RoleLabel &role, Weighting weighting) {
  bool first = false;
  bool second = false;
  if (weighting == Weighting::kGrammaticalRole) {
    first = role.grammatical == GrammaticalSlot::kSubject;
    second = role.grammatical == GrammaticalSlot::kObject;
  } else {
    first = role.semantic == SemanticSlot::kAgent;
    second = role.semantic == SemanticSlot::kPatient;
  }
  if (first) return role.is_pronoun ? 5.0 : 3.0;
  if (second) return role.is_pronoun ? 4.0 : 2.0;
  return 1.0;
}

double EntityWeight(const Utterance &utterance, EntityId entity,
                    Weighting weighting, Aggregator aggregator) {
  bool found = false;
  double total = 0.0;
  for (const UtteranceMention &m : utterance.mentions) {
    if (m.entity != entity) continue;
    double w = MentionWeight(m.role, weighting);
    if (!found) {
      total = w;
    } else if (aggregator == Aggregator::kMax) {
      total = std::max(total, w);
    } else {
      total += w;
    }
    found = true;
  }
  if (!found) {
    throw Error(ErrorCode::kInvalidArgument,
                "entity " + std::to_string(entity) +
                    " is not realized in utterance " +
                    std::to_string(utterance.ordinal));
  }
  return total;
}

CenterList ForwardCenters(const Utterance &utterance,
                          const std::map<EntityId, int> &chain_sizes,
                          const InstantiationConfig &config) {
  CenterList cf;
  for (const UtteranceMention &m : utterance.mentions) {
    if (FindEntity(cf, m.entity) != nullptr) continue;
    if (config.cf_candidate == CfCandidate::kClusterOnly) {
      auto it = chain_sizes.find(m.entity);
      if (it == chain_sizes.end() || it->second < 2) continue;
    }
    cf.push_back({m.entity,
                  EntityWeight(utterance, m.entity, config.weighting,
                               config.aggregator),
                  m.span.start, m.span.end});
  }
  return cf;
}

std::optional<EntityId> PreferredCenter(const CenterList &cf) {
  const WeightedEntity *best = nullptr;
  for (const WeightedEntity &e : cf) {
    if (best == nullptr || Outranks(e, *best)) best = &e;
  }
  if (best == nullptr) return std::nullopt;
  return best->entity;
}

std::optional<EntityId> BackwardCenter(const CenterList &prev,
                                       const CenterList &cur) {
  const WeightedEntity *best = nullptr;
  for (const WeightedEntity &e : prev) {
    if (FindEntity(cur, e.entity) == nullptr) continue;
    if (best == nullptr || Outranks(e, *best)) best = &e;
  }
  if (best == nullptr) return std::nullopt;
  return best->entity;
}

Transition ClassifyTransition(std::optional<EntityId> prev_cb,
                              std::optional<EntityId> cb,
                              std::optional<EntityId> cp) {
  if (!cb) return Transition::kNocb;
  const bool keeps_center = !prev_cb || *cb == *prev_cb;
  const bool is_preferred = cp && *cb == *cp;
  if (keeps_center) {
    return is_preferred ? Transition::kContinue : Transition::kRetain;
  }
  return is_preferred ? Transition::kSmoothShift : Transition::kRoughShift;
}

Transition ClassifyTransition(const CenteringFrame &prev,
                              const CenteringFrame &cur) {
  return ClassifyTransition(prev.cb, cur.cb, cur.cp);
}

std::vector<CenteringFrame> LinkFrames(std::span<const CenterList> cfs,
                                       bool skip_null_utterances) {
  std::vector<CenteringFrame> frames(cfs.size());
  int prev = -1;
  for (size_t i = 0; i < cfs.size(); ++i) {
    CenteringFrame &frame = frames[i];
    frame.ordinal = static_cast<int>(i);
    frame.cf = cfs[i];
    frame.cp = PreferredCenter(frame.cf);
    const bool null = frame.cf.empty();
    if (null && (skip_null_utterances || prev < 0)) {
      frame.transition = Transition::kNocb;
      frame.linked = false;
      continue;
    }
    frame.linked = true;
    if (prev < 0) {
      frame.transition = Transition::kInitial;
    } else {
      frame.cb = BackwardCenter(frames[prev].cf, frame.cf);
      frame.transition = ClassifyTransition(frames[prev], frame);
    }
    prev = static_cast<int>(i);
  }
  return frames;
}

std::vector<CenterList> AllForwardCenters(const Discourse &discourse,
                                          const InstantiationConfig &config) {
  std::vector<CenterList> cfs;
  cfs.reserve(discourse.utterances.size());
  for (const Utterance &u : discourse.utterances) {
    cfs.push_back(ForwardCenters(u, discourse.chain_sizes, config));
  }
  return cfs;
}

std::vector<CenteringFrame> RunCentering(const Discourse &discourse,
                                         const InstantiationConfig &config) {
  std::vector<CenterList> cfs = AllForwardCenters(discourse, config);
  return LinkFrames(cfs, config.skip_null_utterances);
}

}  // namespace centering

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

#include "centering/recency.h"

#include <climits>
#include <cmath>
#include <set>

#include "centering/stats.h"
#include "centering/status.h"
#include "json.hpp"

namespace centering {
namespace {

using Ring = RealPlusTimes;

std::vector<double> Steps(double lo, double hi, double step) {
  std::vector<double> out;
  const int count = static_cast<int>(std::lround((hi - lo) / step));
  for (int i = 0; i <= count; ++i) out.push_back(lo + i * step);
  return out;
}

std::optional<double> TryPearson(const std::vector<double> &scores,
                                 const std::vector<double> &f1s) {
  try {
    return Pearson(scores, f1s, "centering_score", "conll_f1");
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kDegenerate) return std::nullopt;
    throw;
  }
}

// Precomputed Cf lists of every discourse of one variant.
using VariantCenters = std::vector<std::vector<CenterList>>;

double ScoreCenters(const VariantCenters &centers,
                    const InstantiationConfig &config,
                    const RecencyConfig &rc) {
  double total = 0.0;
  int count = 0;
  for (const auto &cfs : centers) {
    auto frames = LinkFramesWithRecency(cfs, config.skip_null_utterances, rc);
    Scorecard card = ComputeScorecard(frames);
    if (!card.valid()) continue;
    total += card.kp;
    ++count;
  }
  if (count == 0) {
    throw Error(ErrorCode::kEmpty, "variant has no discourse with a transition");
  }
  return total / count;
}

}  // namespace

double ApplyForget(const ForgetFunction &forget, double weight) {
  double out = Ring::Zero();
  switch (forget.kind) {
    case ForgetKind::kZero:
      out = Ring::Zero();
      break;
    case ForgetKind::kExponentialDecay:
      out = forget.gamma * weight;
      break;
    case ForgetKind::kAffine:
      out = weight / (1.0 + std::exp(-(forget.a * weight + forget.b)));
      break;
  }
  if (!std::isfinite(out) || out < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "forget function produced an invalid weight " +
                    std::to_string(out));
  }
  return out;
}

WeightedCenterSet UpdateCenterSet(const WeightedCenterSet &prev,
                                  const CenterList &prev_cf,
                                  const CenterList &cur_cf,
                                  const RecencyConfig &rc) {
  WeightedCenterSet next;
  for (const auto &[entity, weight] : prev.weights) {
    next.weights[entity] = ApplyForget(rc.forget, weight);
  }
  for (const WeightedEntity &e : prev_cf) {
    double gate = Ring::One();
    if (rc.gate == Gate::kMembershipIndicator) {
      gate = FindEntity(cur_cf, e.entity) ? Ring::One() : Ring::Zero();
    }
    auto [it, inserted] = next.weights.try_emplace(e.entity, Ring::Zero());
    it->second = Ring::Plus(it->second, Ring::Times(gate, e.weight));
  }
  return next;
}

std::optional<EntityId> BackwardCenterRecency(const WeightedCenterSet &set,
                                              const CenterList *order) {
  auto position = [&](EntityId entity) {
    if (order != nullptr) {
      if (const WeightedEntity *e = FindEntity(*order, entity))
        return e->first_start;
    }
    return INT_MAX;
  };
  std::optional<EntityId> best;
  double best_weight = Ring::Zero();
  int best_position = INT_MAX;
  for (const auto &[entity, weight] : set.weights) {
    if (weight <= Ring::Zero()) continue;
    const int pos = position(entity);
    // Map iteration is by ascending id, so equal keys keep the smaller id.
    if (!best || weight > best_weight ||
        (weight == best_weight && pos < best_position)) {
      best = entity;
      best_weight = weight;
      best_position = pos;
    }
  }
  return best;
}

std::vector<CenteringFrame> LinkFramesWithRecency(
    std::span<const CenterList> cfs, bool skip_null_utterances,
    const RecencyConfig &rc) {
  std::vector<CenteringFrame> frames(cfs.size());
  WeightedCenterSet set;
  int prev = -1;
  for (size_t i = 0; i < cfs.size(); ++i) {
    CenteringFrame &frame = frames[i];
    frame.ordinal = static_cast<int>(i);
    frame.cf = cfs[i];
    frame.cp = PreferredCenter(frame.cf);
    const bool null = frame.cf.empty();
    if (null && (skip_null_utterances || prev < 0)) {
      frame.transition = Transition::kNocb;
      continue;
    }
    frame.linked = true;
    if (prev < 0) {
      frame.transition = Transition::kInitial;
    } else {
      set = UpdateCenterSet(set, frames[prev].cf, frame.cf, rc);
      frame.cb = BackwardCenterRecency(set, &frames[prev].cf);
      frame.transition = ClassifyTransition(frames[prev], frame);
    }
    prev = static_cast<int>(i);
  }
  return frames;
}

std::vector<CenteringFrame> RunRecencyCentering(
    const Discourse &discourse, const InstantiationConfig &config,
    const RecencyConfig &rc) {
  std::vector<CenterList> cfs = AllForwardCenters(discourse, config);
  return LinkFramesWithRecency(cfs, config.skip_null_utterances, rc);
}

std::vector<CenteringFrame> LinkConfiguredFrames(
    std::span<const CenterList> cfs, const InstantiationConfig &config) {
  if (config.recency) {
    return LinkFramesWithRecency(cfs, config.skip_null_utterances,
                                 *config.recency);
  }
  return LinkFrames(cfs, config.skip_null_utterances);
}

std::vector<CenteringFrame> RunConfiguredCentering(
    const Discourse &discourse, const InstantiationConfig &config) {
  std::vector<CenterList> cfs = AllForwardCenters(discourse, config);
  return LinkConfiguredFrames(cfs, config);
}

ForgetGrid ForgetGrid::Default() {
  ForgetGrid grid;
  grid.gammas = Steps(0.0, 1.0, 0.05);
  grid.affine_a = Steps(-2.0, 2.0, 0.5);
  grid.affine_b = Steps(-4.0, 4.0, 0.5);
  return grid;
}

ForgetGrid ForgetGrid::DecayOnly() {
  ForgetGrid grid;
  grid.gammas = Steps(0.0, 1.0, 0.05);
  return grid;
}

double RecencyCorpusScore(std::span<const Discourse> discourses,
                          const InstantiationConfig &config,
                          const RecencyConfig &rc) {
  VariantCenters centers;
  for (const Discourse &d : discourses) {
    centers.push_back(AllForwardCenters(d, config));
  }
  return ScoreCenters(centers, config, rc);
}

FitReport FitForget(std::span<const FitVariant> variants,
                    const InstantiationConfig &config,
                    const ForgetGrid &grid) {
  if (variants.size() < 3) {
    throw Error(ErrorCode::kPrecondition,
                "fitting a forget function needs at least 3 variants, got " +
                    std::to_string(variants.size()));
  }
  FitReport report;
  std::set<double> distinct;
  std::vector<VariantCenters> centers;
  for (const FitVariant &v : variants) {
    report.names.push_back(v.name);
    report.f1s.push_back(v.conll_f1);
    distinct.insert(v.conll_f1);
    VariantCenters vc;
    for (const Discourse &d : v.discourses) {
      vc.push_back(AllForwardCenters(d, config));
    }
    centers.push_back(std::move(vc));
  }
  if (distinct.size() < 3) {
    throw Error(ErrorCode::kPrecondition,
                "fitting a forget function needs at least 3 distinct CoNLL F1 "
                "values, got " + std::to_string(distinct.size()));
  }

  auto scores_for = [&](const RecencyConfig &rc) {
    std::vector<double> scores;
    for (const VariantCenters &vc : centers) {
      scores.push_back(ScoreCenters(vc, config, rc));
    }
    return scores;
  };

  std::vector<RecencyConfig> space;
  for (double gamma : grid.gammas) {
    space.push_back({Semiring::kRealPlusTimes, ForgetFunction::Decay(gamma),
                     grid.gate});
  }
  for (double a : grid.affine_a) {
    for (double b : grid.affine_b) {
      space.push_back({Semiring::kRealPlusTimes, ForgetFunction::Affine(a, b),
                       grid.gate});
    }
  }

  bool found = false;
  for (const RecencyConfig &rc : space) {
    std::vector<double> scores = scores_for(rc);
    FitCandidate candidate{rc, TryPearson(scores, report.f1s)};
    if (candidate.pearson_r && (!found || *candidate.pearson_r > report.best_r)) {
      found = true;
      report.best = rc;
      report.best_r = *candidate.pearson_r;
      report.best_scores = scores;
    }
    report.candidates.push_back(candidate);
  }
  if (!found) {
    throw Error(ErrorCode::kDegenerate,
                "series 'centering_score' is constant for every forget "
                "candidate");
  }
  report.vanilla_scores = scores_for(RecencyConfig::Vanilla());
  report.vanilla_r = TryPearson(report.vanilla_scores, report.f1s);
  return report;
}

std::string FitReportToJson(const FitReport &report) {
  using json = nlohmann::ordered_json;
  auto forget_json = [](const RecencyConfig &rc) {
    return json::parse(RecencyToJson(rc));
  };
  json j;
  j["best"] = forget_json(report.best);
  j["best_pearson_r"] = report.best_r;
  j["vanilla_pearson_r"] =
      report.vanilla_r ? json(*report.vanilla_r) : json(nullptr);
  json variants = json::array();
  for (size_t i = 0; i < report.names.size(); ++i) {
    variants.push_back({{"name", report.names[i]},
                        {"conll_f1", report.f1s[i]},
                        {"best_score", report.best_scores[i]},
                        {"vanilla_score", report.vanilla_scores[i]}});
  }
  j["variants"] = variants;
  json candidates = json::array();
  for (const FitCandidate &c : report.candidates) {
    json entry = forget_json(c.config);
    entry["pearson_r"] = c.pearson_r ? json(*c.pearson_r) : json(nullptr);
    candidates.push_back(entry);
  }
  j["candidates"] = candidates;
  return j.dump(2);
}

}  // namespace centering

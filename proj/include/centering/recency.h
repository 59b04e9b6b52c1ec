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

// Recency-aware backward centers.
//
// Instead of a single backward center chosen from the previous utterance, a
// weighted set of entities is carried through the discourse:
//
//   set(n)    = set(n-1) ∪ Cf(n-1)
//   weight(e) = forget(weight_{n-1}(e)) ⊕ gate(e; Cf(n), Cf(n-1)) ⊗ w_{n-1}(e)
//
// and Cb(n) is the heaviest entity of set(n). With forget = 0 and the
// membership gate this is the ordinary backward center.

#ifndef CENTERING_RECENCY_H_
#define CENTERING_RECENCY_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centering/centering.h"
#include "centering/config.h"
#include "centering/metrics.h"

namespace centering {

// (R, +, x, 0, 1).
struct RealPlusTimes {
  static constexpr double Zero() { return 0.0; }
  static constexpr double One() { return 1.0; }
  static constexpr double Plus(double a, double b) { return a + b; }
  static constexpr double Times(double a, double b) { return a * b; }
};

struct WeightedCenterSet {
  std::map<EntityId, double> weights;
};

// Applies the forget function to one accessibility weight. Throws
// Error(kInvalidArgument) if the result is negative or not finite.
double ApplyForget(const ForgetFunction &forget, double weight);

WeightedCenterSet UpdateCenterSet(const WeightedCenterSet &prev,
                                  const CenterList &prev_cf,
                                  const CenterList &cur_cf,
                                  const RecencyConfig &rc);

// Heaviest entity with a non-zero weight. Ties prefer entities of |order|
// (earliest first mention first), then the smaller id. Without |order| ties
// go to the smaller id.
std::optional<EntityId> BackwardCenterRecency(
    const WeightedCenterSet &set, const CenterList *order = nullptr);

// LinkFrames with the backward center taken from the weighted set. Preferred
// centers stay utterance-local.
std::vector<CenteringFrame> LinkFramesWithRecency(
    std::span<const CenterList> cfs, bool skip_null_utterances,
    const RecencyConfig &rc);

std::vector<CenteringFrame> RunRecencyCentering(
    const Discourse &discourse, const InstantiationConfig &config,
    const RecencyConfig &rc);

// Dispatches on config.recency.
std::vector<CenteringFrame> RunConfiguredCentering(
    const Discourse &discourse, const InstantiationConfig &config);
std::vector<CenteringFrame> LinkConfiguredFrames(
    std::span<const CenterList> cfs, const InstantiationConfig &config);

// One alternative mention->entity map of a corpus and its coreference score.
struct FitVariant {
  std::string name;
  std::vector<Discourse> discourses;
  double conll_f1 = 0.0;
};

// Search space for FitForget. Defaults: gamma 0, 0.05, ..., 1 for
// exponential decay; a in [-2, 2] step 0.5 and b in [-4, 4] step 0.5 for the
// affine family.
struct ForgetGrid {
  std::vector<double> gammas;
  std::vector<double> affine_a;
  std::vector<double> affine_b;
  Gate gate = Gate::kOne;

  static ForgetGrid Default();
  static ForgetGrid DecayOnly();
};

struct FitCandidate {
  RecencyConfig config;
  std::optional<double> pearson_r;  // nullopt when the score series is constant
};

struct FitReport {
  RecencyConfig best;
  double best_r = 0.0;
  std::vector<double> best_scores;
  std::optional<double> vanilla_r;
  std::vector<double> vanilla_scores;
  std::vector<double> f1s;
  std::vector<std::string> names;
  std::vector<FitCandidate> candidates;
};

// Corpus score of one variant under one recency setting: the mean KP over
// its discourses with at least one transition.
double RecencyCorpusScore(std::span<const Discourse> discourses,
                          const InstantiationConfig &config,
                          const RecencyConfig &rc);

// Picks the forget function whose corpus scores correlate best (Pearson)
// with the variants' CoNLL F1. The first grid point wins ties.
// Throws Error(kPrecondition) with fewer than 3 variants or fewer than 3
// distinct F1 values, and Error(kDegenerate) naming the series when every
// candidate's scores are constant.
FitReport FitForget(std::span<const FitVariant> variants,
                    const InstantiationConfig &config,
                    const ForgetGrid &grid = ForgetGrid::Default());

std::string FitReportToJson(const FitReport &report);

}  // namespace centering

#endif  // CENTERING_RECENCY_H_

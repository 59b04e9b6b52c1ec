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

#ifndef CENTERING_METRICS_H_
#define CENTERING_METRICS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "centering/centering.h"

namespace centering {

// Satisfaction rates over the T transitions of a frame sequence (every linked
// frame after the initial one). Higher is more coherent throughout.
struct Scorecard {
  int t = 0;
  double not_nocb = 0.0;
  double cheap = 0.0;
  double coherence = 0.0;
  double salience = 0.0;
  double kp = 0.0;  // sum of the four rates, in [0, 4]
  int continues = 0;
  int retains = 0;
  int smooth_shifts = 0;
  int rough_shifts = 0;
  int nocbs = 0;

  // False when there is no transition to score (T = 0).
  bool valid() const { return t > 0; }
};

Scorecard ComputeScorecard(std::span<const CenteringFrame> frames);

enum class Metric { kNocb, kCheap, kCoherence, kSalience, kKp, kTran };

inline constexpr Metric kAllMetrics[] = {Metric::kNocb,      Metric::kCheap,
                                         Metric::kCoherence, Metric::kSalience,
                                         Metric::kKp,        Metric::kTran};

const char *ToString(Metric metric);
std::optional<Metric> MetricFromString(std::string_view name);

enum class Ordering { kABetter, kEqual, kBBetter };

// Scalar metrics: larger wins, ties within 1e-12. kTran: more continues, then
// more retains, then more smooth shifts, then fewer rough shifts.
// Throws Error(kPrecondition) when a.t != b.t.
Ordering CompareOrderings(Metric metric, const Scorecard &a,
                          const Scorecard &b);

// Value of a scalar metric (kTran has none and throws).
double MetricValue(Metric metric, const Scorecard &card);

// "doc_id,t,not_nocb,cheap,coherence,salience,kp,cont,ret,sshift,rshift"
std::string ScorecardCsvHeader();
std::string ScorecardCsvRow(const std::string &doc_id, const Scorecard &card);

}  // namespace centering

#endif  // CENTERING_METRICS_H_

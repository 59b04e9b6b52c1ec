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

#include "centering/metrics.h"

#include <cmath>

#include <fmt/format.h>

#include "centering/status.h"

namespace centering {
namespace {

constexpr double kTolerance = 1e-12;

Ordering CompareCounts(int a, int b, bool more_is_better) {
  if (a == b) return Ordering::kEqual;
  return (a > b) == more_is_better ? Ordering::kABetter : Ordering::kBBetter;
}

}  // namespace

Scorecard ComputeScorecard(std::span<const CenteringFrame> frames) {
  Scorecard card;
  int not_nocb = 0, cheap = 0, coherence = 0, salience = 0;
  const CenteringFrame *prev = nullptr;
  for (const CenteringFrame &frame : frames) {
    if (!frame.linked) continue;
    if (prev == nullptr) {
      prev = &frame;
      continue;
    }
    ++card.t;
    switch (frame.transition) {
      case Transition::kContinue:
        ++card.continues;
        break;
      case Transition::kRetain:
        ++card.retains;
        break;
      case Transition::kSmoothShift:
        ++card.smooth_shifts;
        break;
      case Transition::kRoughShift:
        ++card.rough_shifts;
        break;
      case Transition::kNocb:
      case Transition::kInitial:
        ++card.nocbs;
        break;
    }
    if (frame.cb) {
      ++not_nocb;
      if (prev->cb && *prev->cb == *frame.cb) ++coherence;
      if (frame.cp && *frame.cp == *frame.cb) ++salience;
      if (prev->cp && *prev->cp == *frame.cb) ++cheap;
    }
    prev = &frame;
  }
  if (card.t > 0) {
    const double t = card.t;
    card.not_nocb = not_nocb / t;
    card.cheap = cheap / t;
    card.coherence = coherence / t;
    card.salience = salience / t;
    card.kp = card.not_nocb + card.cheap + card.coherence + card.salience;
  }
  return card;
}

const char *ToString(Metric metric) {
  switch (metric) {
    case Metric::kNocb:
      return "nocb";
    case Metric::kCheap:
      return "cheap";
    case Metric::kCoherence:
      return "coherence";
    case Metric::kSalience:
      return "salience";
    case Metric::kKp:
      return "kp";
    case Metric::kTran:
      return "tran";
  }
  return "";
}

std::optional<Metric> MetricFromString(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (name == ToString(m)) return m;
  }
  if (name == "not_nocb") return Metric::kNocb;
  return std::nullopt;
}

double MetricValue(Metric metric, const Scorecard &card) {
  switch (metric) {
    case Metric::kNocb:
      return card.not_nocb;
    case Metric::kCheap:
      return card.cheap;
    case Metric::kCoherence:
      return card.coherence;
    case Metric::kSalience:
      return card.salience;
    case Metric::kKp:
      return card.kp;
    case Metric::kTran:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument, "tran has no scalar value");
}

Ordering CompareOrderings(Metric metric, const Scorecard &a,
                          const Scorecard &b) {
  if (a.t != b.t) {
    throw Error(ErrorCode::kPrecondition,
                "cannot compare orderings with " + std::to_string(a.t) +
                    " and " + std::to_string(b.t) + " transitions");
  }
  if (metric == Metric::kTran) {
    for (Ordering o : {CompareCounts(a.continues, b.continues, true),
                       CompareCounts(a.retains, b.retains, true),
                       CompareCounts(a.smooth_shifts, b.smooth_shifts, true),
                       CompareCounts(a.rough_shifts, b.rough_shifts, false)}) {
      if (o != Ordering::kEqual) return o;
    }
    return Ordering::kEqual;
  }
  const double diff = MetricValue(metric, a) - MetricValue(metric, b);
  if (std::abs(diff) <= kTolerance) return Ordering::kEqual;
  return diff > 0 ? Ordering::kABetter : Ordering::kBBetter;
}

std::string ScorecardCsvHeader() {
  return "doc_id,t,not_nocb,cheap,coherence,salience,kp,cont,ret,sshift,"
         "rshift";
}

std::string ScorecardCsvRow(const std::string &doc_id, const Scorecard &card) {
  if (!card.valid()) {
    return fmt::format("{},0,,,,,,0,0,0,0", doc_id);
  }
  return fmt::format("{},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{},{},{},{}",
                     doc_id, card.t, card.not_nocb, card.cheap, card.coherence,
                     card.salience, card.kp, card.continues, card.retains,
                     card.smooth_shifts, card.rough_shifts);
}

}  // namespace centering

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

#include "centering/coherence.h"

#include <algorithm>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "centering/log.h"
#include "centering/random.h"
#include "centering/recency.h"
#include "centering/status.h"

namespace centering {

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) {
    if (f > UINT64_MAX / static_cast<std::uint64_t>(k)) return UINT64_MAX;
    f *= k;
  }
  return f;
}

std::vector<std::vector<int>> ExhaustivePermutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  while (std::next_permutation(perm.begin(), perm.end())) out.push_back(perm);
  return out;
}

std::vector<std::vector<int>> SampledPermutations(int n, int count,
                                                  std::uint64_t seed) {
  if (count < 0 || static_cast<std::uint64_t>(count) > Factorial(n) - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot draw " + std::to_string(count) +
                    " distinct non-identity orderings of " +
                    std::to_string(n) + " utterances");
  }
  SeededRng rng(seed);
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<std::vector<int>> seen{identity};
  std::vector<std::vector<int>> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    std::vector<int> perm = identity;
    for (int i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.Below(static_cast<std::uint64_t>(i) + 1)]);
    }
    if (seen.insert(perm).second) out.push_back(std::move(perm));
  }
  return out;
}

std::vector<std::vector<int>> PermutationsOf(int n,
                                             const PermutationPlan &plan) {
  if (n < 2) {
    throw Error(ErrorCode::kPrecondition,
                "permutation needs at least 2 utterances, got " +
                    std::to_string(n));
  }
  const std::uint64_t space = Factorial(n) - 1;
  PermutationMode mode = plan.mode;
  if (mode == PermutationMode::kAuto) {
    mode = n <= plan.threshold ? PermutationMode::kExhaustive
                               : PermutationMode::kSampled;
  }
  if (mode == PermutationMode::kExhaustive && n > plan.threshold) {
    throw Error(ErrorCode::kPrecondition,
                "exhaustive permutation is limited to " +
                    std::to_string(plan.threshold) + " utterances, got " +
                    std::to_string(n));
  }
  if (mode == PermutationMode::kSampled &&
      static_cast<std::uint64_t>(std::max(plan.sample_size, 0)) < space) {
    return SampledPermutations(n, plan.sample_size, plan.seed);
  }
  return ExhaustivePermutations(n);
}

std::vector<CenterList> ScoreableCenters(const Discourse &discourse,
                                         const InstantiationConfig &config) {
  std::vector<CenterList> cfs = AllForwardCenters(discourse, config);
  if (config.skip_null_utterances) {
    std::erase_if(cfs, [](const CenterList &cf) { return cf.empty(); });
  }
  return cfs;
}

std::vector<CoherenceResult> CoherenceScores(const Discourse &discourse,
                                             const InstantiationConfig &config,
                                             std::span<const Metric> metrics,
                                             const PermutationPlan &plan) {
  std::vector<CenterList> cfs = ScoreableCenters(discourse, config);
  const int n = static_cast<int>(cfs.size());
  if (n < 2) {
    throw Error(ErrorCode::kPrecondition,
                "discourse '" + discourse.key + "' has " + std::to_string(n) +
                    " scoreable utterance(s)");
  }
  Scorecard original = ComputeScorecard(LinkConfiguredFrames(cfs, config));
  if (!original.valid()) {
    throw Error(ErrorCode::kPrecondition,
                "discourse '" + discourse.key + "' has no transition to score");
  }

  PermutationPlan stream = plan;
  stream.seed = DeriveSeed(plan.seed, discourse.key);
  std::vector<CoherenceResult> results(metrics.size());
  for (size_t k = 0; k < metrics.size(); ++k) {
    results[k].metric = metrics[k];
    results[k].n_utt = n;
  }
  std::vector<CenterList> reordered(n);
  for (const std::vector<int> &perm : PermutationsOf(n, stream)) {
    for (int i = 0; i < n; ++i) reordered[i] = cfs[perm[i]];
    Scorecard candidate =
        ComputeScorecard(LinkConfiguredFrames(reordered, config));
    for (CoherenceResult &r : results) {
      switch (CompareOrderings(r.metric, original, candidate)) {
        case Ordering::kABetter:
          ++r.worse;
          break;
        case Ordering::kEqual:
          ++r.equal;
          break;
        case Ordering::kBBetter:
          ++r.better;
          break;
      }
    }
  }
  for (CoherenceResult &r : results) {
    const double total = static_cast<double>(r.worse + r.equal + r.better);
    r.ch = 100.0 * (r.worse + r.equal / 2.0) / total;
  }
  return results;
}

CoherenceResult CoherenceScore(const Discourse &discourse,
                               const InstantiationConfig &config,
                               Metric metric, const PermutationPlan &plan) {
  const Metric one[] = {metric};
  return CoherenceScores(discourse, config, one, plan).front();
}

CorpusCoherence CorpusCoherenceScore(std::span<const Discourse> discourses,
                                     const InstantiationConfig &config,
                                     Metric metric,
                                     const PermutationPlan &plan) {
  CorpusCoherence out;
  double total = 0.0;
  for (const Discourse &d : discourses) {
    try {
      total += CoherenceScore(d, config, metric, plan).ch;
      ++out.scored;
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kPrecondition) throw;
      LogInfo("skipping: " + std::string(e.what()));
      ++out.skipped;
    }
  }
  if (out.scored == 0) {
    throw Error(ErrorCode::kEmpty, "no scoreable discourse in corpus (" +
                                       std::to_string(out.skipped) +
                                       " skipped)");
  }
  out.mean_ch = total / out.scored;
  return out;
}

std::string CoherenceCsvHeader() {
  return "doc_id,metric,n_utt,worse,equal,better,ch";
}

std::string CoherenceCsvRow(const std::string &doc_id,
                            const CoherenceResult &result) {
  return fmt::format("{},{},{},{},{},{},{:.6f}", doc_id, ToString(result.metric),
                     result.n_utt, result.worse, result.equal, result.better,
                     result.ch);
}

}  // namespace centering

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

// Permutation-based coherence assessment.
//
// The original utterance order of a discourse is compared, under one metric,
// against reorderings of the same utterances. The mention->entity map stays
// fixed; only adjacency changes, so centers and transitions are recomputed
// for every candidate. With W worse, E equal and B better candidates,
//
//   ch = 100 * (W + E / 2) / (W + E + B).

#ifndef CENTERING_COHERENCE_H_
#define CENTERING_COHERENCE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "centering/centering.h"
#include "centering/config.h"
#include "centering/metrics.h"

namespace centering {

enum class PermutationMode {
  kAuto,        // exhaustive up to `threshold` utterances, sampled above
  kExhaustive,  // only allowed up to `threshold` utterances
  kSampled,
};

struct PermutationPlan {
  PermutationMode mode = PermutationMode::kAuto;
  int sample_size = 100;
  int threshold = 5;
  std::uint64_t seed = 42;
};

// n! saturated at UINT64_MAX.
std::uint64_t Factorial(int n);

// Every ordering of 0..n-1 except the identity, in lexicographic order.
std::vector<std::vector<int>> ExhaustivePermutations(int n);

// |count| distinct non-identity orderings drawn by seeded Fisher-Yates with
// rejection. Requires count <= n! - 1.
std::vector<std::vector<int>> SampledPermutations(int n, int count,
                                                  std::uint64_t seed);

// Candidate orderings for a discourse of n scoreable utterances. Sampling
// degrades to the exhaustive set when sample_size >= n! - 1.
// Throws Error(kPrecondition) if n < 2 or exhaustive mode is forced above
// the threshold.
std::vector<std::vector<int>> PermutationsOf(int n,
                                             const PermutationPlan &plan);

struct CoherenceResult {
  Metric metric = Metric::kKp;
  int n_utt = 0;
  long worse = 0;
  long equal = 0;
  long better = 0;
  double ch = 0.0;  // percent
};

// Cf lists of the utterances that take part in permutation: all of them, or
// only non-null ones when null utterances are skipped.
std::vector<CenterList> ScoreableCenters(const Discourse &discourse,
                                         const InstantiationConfig &config);

// Scores every metric in |metrics| against one shared candidate set. The
// sampling stream is derived from plan.seed and the discourse key.
// Throws Error(kPrecondition) when the discourse has fewer than two scoreable
// utterances or its original ordering has no transition.
std::vector<CoherenceResult> CoherenceScores(const Discourse &discourse,
                                             const InstantiationConfig &config,
                                             std::span<const Metric> metrics,
                                             const PermutationPlan &plan);

CoherenceResult CoherenceScore(const Discourse &discourse,
                               const InstantiationConfig &config,
                               Metric metric, const PermutationPlan &plan);

struct CorpusCoherence {
  double mean_ch = 0.0;
  int scored = 0;
  int skipped = 0;
};

// Unweighted mean of ch over scoreable discourses; the rest are skipped with
// a diagnostic. Throws Error(kEmpty) if nothing is scoreable.
CorpusCoherence CorpusCoherenceScore(std::span<const Discourse> discourses,
                                     const InstantiationConfig &config,
                                     Metric metric,
                                     const PermutationPlan &plan);

// "doc_id,metric,n_utt,worse,equal,better,ch"
std::string CoherenceCsvHeader();
std::string CoherenceCsvRow(const std::string &doc_id,
                            const CoherenceResult &result);

}  // namespace centering

#endif  // CENTERING_COHERENCE_H_

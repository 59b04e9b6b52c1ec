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

// Coreference scorers: MUC (link based), B-cubed (mention based),
// CEAF-phi4 (entity alignment) and their mean, the CoNLL F1.
//
// Mentions match by exact span. Degenerate denominators (no links, no
// mentions, no chains) yield 0 instead of an error.

#ifndef CENTERING_COREF_EVAL_H_
#define CENTERING_COREF_EVAL_H_

#include <span>
#include <string>
#include <vector>

#include "centering/corpus.h"

namespace centering {

struct MentionKey {
  int sentence = 0;
  int start = 0;
  int end = 0;

  friend auto operator<=>(const MentionKey &, const MentionKey &) = default;
};

struct ChainSet {
  std::vector<std::vector<MentionKey>> chains;

  // Throws Error(kInvalidArgument) if a chain is empty or two chains share a
  // mention.
  void Validate() const;
  size_t MentionCount() const;
};

ChainSet ChainSetFromDocument(const Document &doc);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Numerators and denominators, summable across documents.
struct MetricCounts {
  double recall_num = 0.0;
  double recall_den = 0.0;
  double precision_num = 0.0;
  double precision_den = 0.0;

  MetricCounts &operator+=(const MetricCounts &other);
  Prf Score() const;
};

MetricCounts MucCounts(const ChainSet &gold, const ChainSet &pred);
MetricCounts BCubedCounts(const ChainSet &gold, const ChainSet &pred);
MetricCounts CeafPhi4Counts(const ChainSet &gold, const ChainSet &pred);

Prf Muc(const ChainSet &gold, const ChainSet &pred);
Prf BCubed(const ChainSet &gold, const ChainSet &pred);
Prf CeafPhi4(const ChainSet &gold, const ChainSet &pred);
double ConllF1(const ChainSet &gold, const ChainSet &pred);

// phi4(K, R) = 2 |K ∩ R| / (|K| + |R|).
double Phi4(std::span<const MentionKey> key, std::span<const MentionKey> response);

// Maximum-weight one-to-one assignment (Hungarian algorithm). Returns, for
// each row, the matched column or -1; rows and columns may differ in number.
std::vector<int> MaxWeightAssignment(
    const std::vector<std::vector<double>> &weights);

struct CorefReport {
  Prf muc;
  Prf b3;
  Prf ceaf4;
  double conll_f1 = 0.0;
  int documents = 0;
};

// Scores aligned documents (matched by Document::Key(); a gold document with
// no prediction counts against an empty prediction). Counts are summed over
// documents before computing each metric.
CorefReport EvaluateCorpus(std::span<const Document> gold,
                           std::span<const Document> pred);

// {"muc":{"p","r","f1"},"b3":{...},"ceaf4":{...},"conll_f1":x,"documents":n}
std::string CorefReportToJson(const CorefReport &report);

}  // namespace centering

#endif  // CENTERING_COREF_EVAL_H_

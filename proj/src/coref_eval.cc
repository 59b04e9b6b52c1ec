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

#include "centering/coref_eval.h"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "centering/log.h"
#include "centering/status.h"
#include "json.hpp"

namespace centering {
namespace {

using ChainIndex = std::map<MentionKey, int>;

ChainIndex IndexChains(const ChainSet &set) {
  ChainIndex index;
  for (size_t c = 0; c < set.chains.size(); ++c) {
    for (const MentionKey &m : set.chains[c]) index[m] = static_cast<int>(c);
  }
  return index;
}

double Ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

// Sum over |keys| chains of |S| - p(S), and of |S| - 1.
std::pair<double, double> MucSide(const ChainSet &keys,
                                  const ChainSet &responses) {
  ChainIndex response_of = IndexChains(responses);
  double num = 0.0, den = 0.0;
  for (const auto &chain : keys.chains) {
    std::set<int> partitions;
    int unmatched = 0;
    for (const MentionKey &m : chain) {
      auto it = response_of.find(m);
      if (it == response_of.end()) {
        ++unmatched;
      } else {
        partitions.insert(it->second);
      }
    }
    const double parts = static_cast<double>(partitions.size() + unmatched);
    num += chain.size() - parts;
    den += chain.size() - 1.0;
  }
  return {num, den};
}

// Sum over mentions of |keys| of |K ∩ R(m)| / |K|, and the mention count.
std::pair<double, double> BCubedSide(const ChainSet &keys,
                                     const ChainSet &responses) {
  ChainIndex response_of = IndexChains(responses);
  double num = 0.0, den = 0.0;
  for (const auto &chain : keys.chains) {
    std::map<int, int> overlap;
    for (const MentionKey &m : chain) {
      auto it = response_of.find(m);
      if (it != response_of.end()) ++overlap[it->second];
    }
    for (const MentionKey &m : chain) {
      auto it = response_of.find(m);
      if (it != response_of.end()) {
        num += static_cast<double>(overlap[it->second]) / chain.size();
      }
    }
    den += chain.size();
  }
  return {num, den};
}

}  // namespace

void ChainSet::Validate() const {
  std::set<MentionKey> seen;
  for (const auto &chain : chains) {
    if (chain.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "chain set has an empty chain");
    }
    for (const MentionKey &m : chain) {
      if (!seen.insert(m).second) {
        throw Error(ErrorCode::kInvalidArgument,
                    "mention appears in more than one chain");
      }
    }
  }
}

size_t ChainSet::MentionCount() const {
  size_t n = 0;
  for (const auto &chain : chains) n += chain.size();
  return n;
}

ChainSet ChainSetFromDocument(const Document &doc) {
  ChainSet set;
  for (const auto &[id, spans] : doc.chains) {
    std::vector<MentionKey> chain;
    for (const MentionSpan &m : spans) {
      chain.push_back({m.sentence, m.start, m.end});
    }
    set.chains.push_back(std::move(chain));
  }
  return set;
}

MetricCounts &MetricCounts::operator+=(const MetricCounts &other) {
  recall_num += other.recall_num;
  recall_den += other.recall_den;
  precision_num += other.precision_num;
  precision_den += other.precision_den;
  return *this;
}

Prf MetricCounts::Score() const {
  Prf prf;
  prf.recall = Ratio(recall_num, recall_den);
  prf.precision = Ratio(precision_num, precision_den);
  const double sum = prf.precision + prf.recall;
  prf.f1 = sum > 0.0 ? 2.0 * prf.precision * prf.recall / sum : 0.0;
  return prf;
}

MetricCounts MucCounts(const ChainSet &gold, const ChainSet &pred) {
  MetricCounts c;
  std::tie(c.recall_num, c.recall_den) = MucSide(gold, pred);
  std::tie(c.precision_num, c.precision_den) = MucSide(pred, gold);
  return c;
}

MetricCounts BCubedCounts(const ChainSet &gold, const ChainSet &pred) {
  MetricCounts c;
  std::tie(c.recall_num, c.recall_den) = BCubedSide(gold, pred);
  std::tie(c.precision_num, c.precision_den) = BCubedSide(pred, gold);
  return c;
}

double Phi4(std::span<const MentionKey> key,
            std::span<const MentionKey> response) {
  if (key.empty() && response.empty()) return 0.0;
  std::set<MentionKey> k(key.begin(), key.end());
  int common = 0;
  for (const MentionKey &m : response) common += k.count(m);
  return 2.0 * common / static_cast<double>(key.size() + response.size());
}

std::vector<int> MaxWeightAssignment(
    const std::vector<std::vector<double>> &weights) {
  const int rows = static_cast<int>(weights.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(weights[0].size());
  if (rows == 0 || cols == 0) return std::vector<int>(rows, -1);

  const bool transpose = rows > cols;
  const int n = transpose ? cols : rows;
  const int m = transpose ? rows : cols;
  auto cost = [&](int i, int j) {  // 1-based, minimized
    return transpose ? -weights[j - 1][i - 1] : -weights[i - 1][j - 1];
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> match(m + 1, 0), way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> min_v(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const int i0 = match[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double reduced = cost(i0, j) - u[i0] - v[j];
        if (reduced < min_v[j]) {
          min_v[j] = reduced;
          way[j] = j0;
        }
        if (min_v[j] < delta) {
          delta = min_v[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          min_v[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> assignment(rows, -1);
  for (int j = 1; j <= m; ++j) {
    if (match[j] == 0) continue;
    if (transpose) {
      assignment[j - 1] = match[j] - 1;
    } else {
      assignment[match[j] - 1] = j - 1;
    }
  }
  return assignment;
}

MetricCounts CeafPhi4Counts(const ChainSet &gold, const ChainSet &pred) {
  MetricCounts c;
  c.recall_den = static_cast<double>(gold.chains.size());
  c.precision_den = static_cast<double>(pred.chains.size());
  if (gold.chains.empty() || pred.chains.empty()) return c;
  std::vector<std::vector<double>> sim(
      gold.chains.size(), std::vector<double>(pred.chains.size(), 0.0));
  for (size_t i = 0; i < gold.chains.size(); ++i) {
    for (size_t j = 0; j < pred.chains.size(); ++j) {
      sim[i][j] = Phi4(gold.chains[i], pred.chains[j]);
    }
  }
  std::vector<int> assignment = MaxWeightAssignment(sim);
  double total = 0.0;
  for (size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] >= 0) total += sim[i][assignment[i]];
  }
  c.recall_num = total;
  c.precision_num = total;
  return c;
}

Prf Muc(const ChainSet &gold, const ChainSet &pred) {
  return MucCounts(gold, pred).Score();
}

Prf BCubed(const ChainSet &gold, const ChainSet &pred) {
  return BCubedCounts(gold, pred).Score();
}

Prf CeafPhi4(const ChainSet &gold, const ChainSet &pred) {
  return CeafPhi4Counts(gold, pred).Score();
}

double ConllF1(const ChainSet &gold, const ChainSet &pred) {
  return (Muc(gold, pred).f1 + BCubed(gold, pred).f1 +
          CeafPhi4(gold, pred).f1) /
         3.0;
}

CorefReport EvaluateCorpus(std::span<const Document> gold,
                           std::span<const Document> pred) {
  std::map<std::string, const Document *> predicted;
  for (const Document &d : pred) predicted[d.Key()] = &d;
  MetricCounts muc, b3, ceaf;
  CorefReport report;
  for (const Document &g : gold) {
    ChainSet key = ChainSetFromDocument(g);
    ChainSet response;
    auto it = predicted.find(g.Key());
    if (it == predicted.end()) {
      LogWarning("no prediction for document '" + g.Key() + "'");
    } else {
      response = ChainSetFromDocument(*it->second);
      predicted.erase(it);
    }
    muc += MucCounts(key, response);
    b3 += BCubedCounts(key, response);
    ceaf += CeafPhi4Counts(key, response);
    ++report.documents;
  }
  for (const auto &[name, doc] : predicted) {
    LogWarning("predicted document '" + name + "' has no gold counterpart");
  }
  report.muc = muc.Score();
  report.b3 = b3.Score();
  report.ceaf4 = ceaf.Score();
  report.conll_f1 = (report.muc.f1 + report.b3.f1 + report.ceaf4.f1) / 3.0;
  return report;
}

std::string CorefReportToJson(const CorefReport &report) {
  using json = nlohmann::ordered_json;
  auto prf = [](const Prf &p) {
    json j;
    j["p"] = p.precision;
    j["r"] = p.recall;
    j["f1"] = p.f1;
    return j;
  };
  json j;
  j["muc"] = prf(report.muc);
  j["b3"] = prf(report.b3);
  j["ceaf4"] = prf(report.ceaf4);
  j["conll_f1"] = report.conll_f1;
  j["documents"] = report.documents;
  return j.dump(2);
}

}  // namespace centering

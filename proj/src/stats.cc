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

#include "centering/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/special_functions/beta.hpp>

#include "centering/status.h"

namespace centering {
namespace {

void CheckPaired(std::span<const double> xs, std::span<const double> ys,
                 size_t minimum) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::kPrecondition,
                "series lengths differ (" + std::to_string(xs.size()) +
                    " vs " + std::to_string(ys.size()) + ")");
  }
  if (xs.size() < minimum) {
    throw Error(ErrorCode::kPrecondition,
                "need at least " + std::to_string(minimum) +
                    " paired observations, got " + std::to_string(xs.size()));
  }
}

double Mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

}  // namespace

double Pearson(std::span<const double> xs, std::span<const double> ys,
               const std::string &x_name, const std::string &y_name) {
  CheckPaired(xs, ys, 3);
  const double mx = Mean(xs);
  const double my = Mean(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    throw Error(ErrorCode::kDegenerate, "series '" + x_name + "' is constant");
  }
  if (syy == 0.0) {
    throw Error(ErrorCode::kDegenerate, "series '" + y_name + "' is constant");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double TTestP(double r, int n) {
  if (n < 3) {
    throw Error(ErrorCode::kPrecondition, "t-test needs n >= 3");
  }
  if (r == 0.0) return 1.0;
  if (std::abs(r) >= 1.0) return 0.0;
  const double df = n - 2;
  const double t2 = r * r * df / (1.0 - r * r);
  // P(|T| > t) = I_{df / (df + t^2)}(df / 2, 1 / 2).
  return boost::math::ibeta(df / 2.0, 0.5, df / (df + t2));
}

double FisherZCompare(double r1, int n1, double r2, int n2) {
  if (n1 <= 3 || n2 <= 3) {
    throw Error(ErrorCode::kPrecondition,
                "Fisher z comparison needs more than 3 observations per "
                "sample");
  }
  if (r1 == r2) return 1.0;
  constexpr double kEdge = 1.0 - 1e-15;
  const double z1 = std::atanh(std::clamp(r1, -kEdge, kEdge));
  const double z2 = std::atanh(std::clamp(r2, -kEdge, kEdge));
  const double z = (z1 - z2) / std::sqrt(1.0 / (n1 - 3) + 1.0 / (n2 - 3));
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

int DefaultBinCount(size_t n) {
  int bins = static_cast<int>(std::ceil(std::cbrt(static_cast<double>(n))));
  // cbrt of a perfect cube can land a hair above the integer.
  if (static_cast<size_t>(bins - 1) * (bins - 1) * (bins - 1) >= n) --bins;
  return std::max(bins, 2);
}

std::vector<int> EqualFrequencyBins(std::span<const double> values,
                                    int nbins) {
  if (nbins < 2) {
    throw Error(ErrorCode::kInvalidArgument, "nbins must be at least 2");
  }
  const size_t n = values.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return values[a] < values[b];
  });
  std::vector<int> bins(n, 0);
  int run_bin = 0;
  for (size_t rank = 0; rank < n; ++rank) {
    const size_t i = order[rank];
    if (rank == 0 || values[i] != values[order[rank - 1]]) {
      run_bin = static_cast<int>(rank * nbins / n);
    }
    bins[i] = run_bin;
  }
  return bins;
}

double PluginMutualInformation(
    const std::vector<std::vector<double>> &joint_counts) {
  double total = 0.0;
  std::vector<double> row_sum(joint_counts.size(), 0.0);
  std::vector<double> col_sum;
  for (size_t i = 0; i < joint_counts.size(); ++i) {
    if (col_sum.size() < joint_counts[i].size())
      col_sum.resize(joint_counts[i].size(), 0.0);
    for (size_t j = 0; j < joint_counts[i].size(); ++j) {
      row_sum[i] += joint_counts[i][j];
      col_sum[j] += joint_counts[i][j];
      total += joint_counts[i][j];
    }
  }
  if (total <= 0.0) return 0.0;
  double mi = 0.0;
  for (size_t i = 0; i < joint_counts.size(); ++i) {
    for (size_t j = 0; j < joint_counts[i].size(); ++j) {
      const double c = joint_counts[i][j];
      if (c <= 0.0) continue;
      mi += (c / total) * std::log(c * total / (row_sum[i] * col_sum[j]));
    }
  }
  return std::max(mi, 0.0);
}

MutualInformationResult MutualInformation(std::span<const double> xs,
                                          std::span<const double> ys,
                                          std::optional<int> nbins) {
  CheckPaired(xs, ys, 4);
  const int bins = nbins.value_or(DefaultBinCount(xs.size()));
  if (bins < 2) {
    throw Error(ErrorCode::kInvalidArgument, "nbins must be at least 2");
  }
  std::vector<int> bx = EqualFrequencyBins(xs, bins);
  std::vector<int> by = EqualFrequencyBins(ys, bins);
  std::vector<std::vector<double>> joint(bins, std::vector<double>(bins, 0.0));
  for (size_t i = 0; i < xs.size(); ++i) joint[bx[i]][by[i]] += 1.0;
  return {PluginMutualInformation(joint), bins};
}

AnalysisReport Analyze(std::span<const double> scores,
                       std::span<const double> f1s, std::optional<int> nbins,
                       const std::string &score_name,
                       const std::string &f1_name) {
  AnalysisReport report;
  report.n = static_cast<int>(scores.size());
  report.pearson_r = Pearson(scores, f1s, score_name, f1_name);
  report.p_value = TTestP(report.pearson_r, report.n);
  MutualInformationResult mi = MutualInformation(scores, f1s, nbins);
  report.mi = mi.mi;
  report.nbins = mi.nbins;
  return report;
}

}  // namespace centering

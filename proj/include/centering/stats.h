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

// Dependence statistics between a centering score series and a coreference
// quality series.

#ifndef CENTERING_STATS_H_
#define CENTERING_STATS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace centering {

// Sample Pearson coefficient, clamped to [-1, 1].
// Throws Error(kPrecondition) for mismatched lengths or n < 3, and
// Error(kDegenerate) naming |x_name| or |y_name| for a constant series.
double Pearson(std::span<const double> xs, std::span<const double> ys,
               const std::string &x_name = "x",
               const std::string &y_name = "y");

// Two-tailed p-value of H0: rho = 0, using t = r sqrt((n-2)/(1-r^2)) with
// n-2 degrees of freedom.
double TTestP(double r, int n);

// Two-tailed p-value for the difference of two independent correlations via
// Fisher's z. Throws Error(kPrecondition) if n1 <= 3 or n2 <= 3.
double FisherZCompare(double r1, int n1, double r2, int n2);

// Bin index per value; every bin gets floor/ceil(N / nbins) values by rank,
// and equal values always share a bin.
std::vector<int> EqualFrequencyBins(std::span<const double> values, int nbins);

// Plug-in mutual information (nats) of a joint count table.
double PluginMutualInformation(
    const std::vector<std::vector<double>> &joint_counts);

struct MutualInformationResult {
  double mi = 0.0;  // nats
  int nbins = 0;
};

// Equal-frequency discretization of both series into nbins bins (default
// ceil(N^(1/3))), then the plug-in estimate.
// Throws Error(kPrecondition) for mismatched lengths or N < 4, and
// Error(kInvalidArgument) for nbins < 2.
MutualInformationResult MutualInformation(std::span<const double> xs,
                                          std::span<const double> ys,
                                          std::optional<int> nbins = {});

int DefaultBinCount(size_t n);

struct AnalysisReport {
  int n = 0;
  double pearson_r = 0.0;
  double p_value = 1.0;
  double mi = 0.0;  // nats
  int nbins = 0;
};

AnalysisReport Analyze(std::span<const double> scores,
                       std::span<const double> f1s,
                       std::optional<int> nbins = {},
                       const std::string &score_name = "centering_score",
                       const std::string &f1_name = "conll_f1");

}  // namespace centering

#endif  // CENTERING_STATS_H_

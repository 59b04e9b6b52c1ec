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

// centering-kit: batch front end over the centering kit C API.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_support.h"
#include "commands.h"

namespace {

using cli::CliError;
using cli::Invocation;
using cli::json;

struct GlobalOptions {
  std::string config_path;
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  std::string manifest;
  std::string weighting;
  std::string aggregator;
  std::string cf_candidate;
};

// Config file, then flag overrides, canonicalized by the library.
json ResolveConfig(const GlobalOptions &g) {
  json config = json::object();
  if (!g.config_path.empty()) {
    try {
      config = json::parse(cli::ReadFile(g.config_path));
    } catch (const json::parse_error &e) {
      throw CliError(cli::kExitInput,
                     g.config_path + ": not valid JSON: " + e.what());
    }
  }
  if (!g.weighting.empty()) config["weighting"] = g.weighting;
  if (!g.aggregator.empty()) config["aggregator"] = g.aggregator;
  if (!g.cf_candidate.empty()) config["cf_candidate"] = g.cf_candidate;
  if (g.seed) config["rng_seed"] = *g.seed;
  cli::ConfigPtr parsed = cli::MakeConfig(config);
  char *text = nullptr;
  cli::Check(ck_config_to_json(parsed.get(), &text), "config");
  return json::parse(cli::TakeString(text));
}

std::vector<std::string> Canonical(const std::vector<std::string> &paths) {
  std::vector<std::string> out;
  for (const auto &p : paths) out.push_back(cli::CanonicalPath(p));
  return out;
}

int Main(int argc, char **argv) {
  CLI::App app{"Centering-theory analysis of coreference-annotated corpora."};
  app.set_version_flag("--version", std::string(ck_version()));
  app.require_subcommand(0, 1);

  GlobalOptions g;
  app.add_option("--config", g.config_path, "Instantiation config (JSON)")
      ->check(CLI::ExistingFile);
  app.add_option("--jobs,-j", g.jobs, "Worker threads across documents")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed,
                 "Seed for every random choice (config rng_seed and "
                 "permutation sampling)");
  app.add_option("--out,-o", g.out_dir, "Output directory");
  app.add_option("--manifest", g.manifest,
                 "Re-run the command recorded in a manifest.json");
  const std::map<std::string, std::string> weightings = {
      {"grammatical", "grammatical_role"},
      {"grammatical_role", "grammatical_role"},
      {"semantic", "semantic_role"},
      {"semantic_role", "semantic_role"}};
  app.add_option("--weighting", g.weighting, "grammatical | semantic")
      ->transform(CLI::CheckedTransformer(weightings));
  app.add_option("--aggregator", g.aggregator, "max | sum")
      ->check(CLI::IsMember({"max", "sum"}));
  app.add_option("--cf-candidate", g.cf_candidate,
                 "cluster_only | include_singleton")
      ->check(CLI::IsMember({"cluster_only", "include_singleton"}));

  // score
  std::vector<std::string> score_inputs;
  CLI::App *score = app.add_subcommand(
      "score", "Per-document centering scorecards and frame dumps");
  score->add_option("corpus", score_inputs, "CoNLL files")->required();

  // permute
  std::vector<std::string> permute_inputs;
  std::vector<std::string> metric_names = {"kp"};
  std::string mode = "auto";
  std::optional<int> sample_size, threshold;
  CLI::App *permute = app.add_subcommand(
      "permute", "Permutation-based coherence scores");
  permute->add_option("corpus", permute_inputs, "CoNLL files")->required();
  permute
      ->add_option("--metric,-m", metric_names,
                   "nocb | cheap | coherence | salience | kp | tran | all")
      ->delimiter(',');
  permute->add_option("--mode", mode, "auto | exhaustive | sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  permute->add_option("--sample-size", sample_size,
                      "Orderings drawn per document when sampling")
      ->check(CLI::PositiveNumber);
  permute->add_option("--threshold", threshold,
                      "Largest utterance count scored exhaustively")
      ->check(CLI::NonNegativeNumber);

  // correlate
  std::string table, compare, score_column = "centering_score",
                              f1_column = "conll_f1";
  int nbins = 0;
  bool bits = false;
  CLI::App *correlate = app.add_subcommand(
      "correlate", "Pearson r, t-test p and mutual information of a table");
  correlate->add_option("table", table, "CSV with score and F1 columns")
      ->required();
  correlate->add_option("--compare", compare,
                        "Second table; adds a Fisher z comparison");
  correlate->add_option("--nbins", nbins, "Bins per series (default cbrt N)")
      ->check(CLI::Range(2, 1 << 20));
  correlate->add_flag("--bits", bits, "Report MI in bits instead of nats");
  correlate->add_option("--score-column", score_column);
  correlate->add_option("--f1-column", f1_column);

  // coref-eval
  std::string gold, pred;
  CLI::App *coref = app.add_subcommand(
      "coref-eval", "MUC, B3, CEAF-e and CoNLL F1 of a prediction");
  coref->add_option("gold", gold, "Gold CoNLL file")->required();
  coref->add_option("pred", pred, "Predicted CoNLL file")->required();

  // fit-recency
  std::string variants, fit_gold, grid = "default";
  CLI::App *fit = app.add_subcommand(
      "fit-recency", "Fit the recency forget function to clustering variants");
  fit->add_option("variants", variants,
                  "CSV with name,path[,conll_f1]; paths relative to it")
      ->required();
  fit->add_option("--gold", fit_gold, "Gold corpus; computes each variant's F1");
  fit->add_option("--grid", grid, "default | decay")
      ->check(CLI::IsMember({"default", "decay"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return cli::kExitFailure;
  }

  Invocation run;
  if (!g.manifest.empty()) {
    if (!app.get_subcommands().empty()) {
      throw CliError(cli::kExitFailure,
                     "--manifest replays a run; do not name a subcommand");
    }
    run = cli::InvocationFromManifest(g.manifest);
    run.out_dir = g.out_dir;
    run.jobs = g.jobs;
    return cli::RunInvocation(run);
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return cli::kExitFailure;
  }

  run.out_dir = g.out_dir;
  run.jobs = g.jobs;
  if (score->parsed()) {
    run.command = "score";
    run.inputs = Canonical(score_inputs);
    run.config = ResolveConfig(g);
  } else if (permute->parsed()) {
    run.command = "permute";
    run.inputs = Canonical(permute_inputs);
    run.config = ResolveConfig(g);
    std::vector<std::string> metrics;
    for (const auto &m : metric_names) {
      if (m == "all") {
        metrics.clear();
        for (int i = 0; i < CK_METRIC_COUNT; ++i) {
          metrics.push_back(ck_metric_name(static_cast<ck_metric>(i)));
        }
        break;
      }
      ck_metric parsed;
      cli::Check(ck_metric_from_name(m.c_str(), &parsed), "--metric");
      metrics.push_back(m);
    }
    run.args["metrics"] = metrics;
    ck_plan plan;
    ck_plan_default(&plan);
    run.plan = {{"mode", mode},
                {"sample_size", sample_size.value_or(plan.sample_size)},
                {"threshold", threshold.value_or(plan.threshold)},
                {"seed", g.seed.value_or(run.config["rng_seed"].get<std::uint64_t>())}};
  } else if (correlate->parsed()) {
    run.command = "correlate";
    run.inputs = {cli::CanonicalPath(table)};
    if (!compare.empty()) run.inputs.push_back(cli::CanonicalPath(compare));
    run.args = {{"score_column", score_column},
                {"f1_column", f1_column},
                {"nbins", nbins},
                {"bits", bits}};
  } else if (coref->parsed()) {
    run.command = "coref-eval";
    run.inputs = Canonical({gold, pred});
  } else if (fit->parsed()) {
    run.command = "fit-recency";
    run.config = ResolveConfig(g);
    run.args = {{"variants", cli::CanonicalPath(variants)}, {"grid", grid}};
    run.inputs = {cli::CanonicalPath(variants)};
    if (!fit_gold.empty()) {
      run.args["gold"] = cli::CanonicalPath(fit_gold);
      run.inputs.push_back(cli::CanonicalPath(fit_gold));
    }
  }
  return cli::RunInvocation(run);
}

}  // namespace

int main(int argc, char **argv) {
  try {
    return Main(argc, argv);
  } catch (const CliError &e) {
    std::cerr << "centering-kit: error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception &e) {
    std::cerr << "centering-kit: error: " << e.what() << "\n";
    return cli::kExitFailure;
  }
}

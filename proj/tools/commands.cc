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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>

namespace cli {
namespace {

namespace fs = std::filesystem;

// One document of a multi-file corpus.
struct DocRef {
  const ck_corpus *corpus = nullptr;
  size_t index = 0;
  std::string key;
};

struct LoadedCorpora {
  std::vector<CorpusPtr> owned;
  std::vector<DocRef> docs;  // sorted by key, then input order
};

LoadedCorpora LoadAll(const std::vector<std::string> &paths) {
  LoadedCorpora out;
  for (const auto &p : paths) {
    out.owned.push_back(LoadCorpus(p));
    const ck_corpus *c = out.owned.back().get();
    for (size_t i = 0; i < ck_corpus_size(c); ++i) {
      out.docs.push_back({c, i, ck_corpus_doc_key(c, i)});
    }
  }
  if (out.docs.empty()) {
    std::string names;
    for (const auto &p : paths) names += (names.empty() ? "" : ", ") + p;
    throw CliError(kExitEmpty, "corpus is empty: " + names);
  }
  std::stable_sort(out.docs.begin(), out.docs.end(),
                   [](const DocRef &a, const DocRef &b) {
                     return a.key < b.key;
                   });
  return out;
}

// Mirrors the library's CENTERING_KIT_LOG handling for the tool's own notes.
bool Quiet() {
  const char *v = std::getenv("CENTERING_KIT_LOG");
  if (v == nullptr) return false;
  const std::string level = v;
  return level == "quiet" || level == "0" || level == "off";
}

// Per-document outcome collected by worker threads.
struct Outcome {
  ck_status status = CK_OK;
  std::string error;
};

void WriteManifest(const Invocation &run, const std::vector<std::string> &outputs,
                   std::string *hash) {
  json m = ManifestJson(run, outputs);
  *hash = ManifestHash(m);
  m["manifest_hash"] = *hash;
  WriteFile(run.out_dir / "manifest.json", m.dump(2) + "\n");
}

std::string ManifestHashFor(const Invocation &run,
                            const std::vector<std::string> &outputs) {
  return ManifestHash(ManifestJson(run, outputs));
}

ck_plan PlanFromJson(const json &j) {
  ck_plan plan;
  ck_plan_default(&plan);
  const std::string mode = j.value("mode", "auto");
  if (mode == "auto") {
    plan.mode = CK_PERMUTE_AUTO;
  } else if (mode == "exhaustive") {
    plan.mode = CK_PERMUTE_EXHAUSTIVE;
  } else if (mode == "sampled") {
    plan.mode = CK_PERMUTE_SAMPLED;
  } else {
    throw CliError(kExitFailure, "unknown permutation mode '" + mode + "'");
  }
  plan.sample_size = j.value("sample_size", plan.sample_size);
  plan.threshold = j.value("threshold", plan.threshold);
  plan.seed = j.value("seed", plan.seed);
  return plan;
}

}  // namespace

int RunScore(const Invocation &run) {
  LoadedCorpora corpora = LoadAll(run.inputs);
  ConfigPtr config = MakeConfig(run.config);
  const size_t n = corpora.docs.size();
  std::vector<std::string> rows(n), frames(n);
  std::vector<Outcome> outcomes(n);
  ParallelFor(n, run.jobs, [&](size_t i) {
    const DocRef &d = corpora.docs[i];
    char *row = nullptr;
    char *dump = nullptr;
    outcomes[i].status = ck_score_document_text(d.corpus, d.index, config.get(),
                                                &row, &dump);
    if (outcomes[i].status != CK_OK) {
      outcomes[i].error = ck_last_error_message();
    }
    rows[i] = TakeString(row);
    frames[i] = TakeString(dump);
  });
  for (size_t i = 0; i < n; ++i) {
    if (outcomes[i].status != CK_OK) {
      throw CliError(ExitCodeFor(outcomes[i].status),
                     corpora.docs[i].key + ": " + outcomes[i].error);
    }
  }
  std::string csv = std::string(ck_scorecard_csv_header()) + "\n";
  std::string jsonl;
  for (size_t i = 0; i < n; ++i) {
    csv += rows[i] + "\n";
    jsonl += frames[i];
  }
  const std::vector<std::string> outputs = {"scores.csv", "frames.jsonl"};
  WriteFile(run.out_dir / outputs[0], csv);
  WriteFile(run.out_dir / outputs[1], jsonl);
  std::string hash;
  WriteManifest(run, outputs, &hash);
  std::cout << "scored " << n << " documents into " << run.out_dir.string()
            << " (manifest " << hash << ")\n";
  return kExitOk;
}

int RunPermute(const Invocation &run) {
  std::vector<ck_metric> metrics;
  for (const auto &name : run.args.at("metrics")) {
    ck_metric m;
    Check(ck_metric_from_name(name.get<std::string>().c_str(), &m));
    metrics.push_back(m);
  }
  if (metrics.empty()) throw CliError(kExitFailure, "no metric selected");
  LoadedCorpora corpora = LoadAll(run.inputs);
  ConfigPtr config = MakeConfig(run.config);
  const ck_plan plan = PlanFromJson(run.plan);
  const size_t n = corpora.docs.size();
  std::vector<std::vector<ck_coherence_result>> results(
      n, std::vector<ck_coherence_result>(metrics.size()));
  std::vector<Outcome> outcomes(n);
  ParallelFor(n, run.jobs, [&](size_t i) {
    const DocRef &d = corpora.docs[i];
    outcomes[i].status =
        ck_coherence_document(d.corpus, d.index, config.get(), metrics.data(),
                              metrics.size(), &plan, results[i].data());
    if (outcomes[i].status != CK_OK) {
      outcomes[i].error = ck_last_error_message();
    }
  });

  std::string csv = std::string(ck_coherence_csv_header()) + "\n";
  std::vector<double> sum(metrics.size(), 0.0);
  int scored = 0, skipped = 0;
  for (size_t i = 0; i < n; ++i) {
    const DocRef &d = corpora.docs[i];
    if (outcomes[i].status == CK_ERR_PRECONDITION) {
      ++skipped;
      if (!Quiet()) {
        std::cerr << "centering-kit: skipping " << d.key << ": "
                  << outcomes[i].error << "\n";
      }
      continue;
    }
    if (outcomes[i].status != CK_OK) {
      throw CliError(ExitCodeFor(outcomes[i].status),
                     d.key + ": " + outcomes[i].error);
    }
    ++scored;
    for (size_t m = 0; m < metrics.size(); ++m) {
      char *row = nullptr;
      Check(ck_coherence_csv_row(d.key.c_str(), &results[i][m], &row));
      csv += TakeString(row) + "\n";
      sum[m] += results[i][m].ch;
    }
  }
  if (scored == 0) {
    throw CliError(kExitEmpty, "all " + std::to_string(skipped) +
                                   " documents were skipped; nothing to "
                                   "score");
  }
  std::string summary = "metric,mean_ch,scored,skipped\n";
  for (size_t m = 0; m < metrics.size(); ++m) {
    summary += std::string(ck_metric_name(metrics[m])) + "," +
               FormatFixed(sum[m] / scored) + "," + std::to_string(scored) +
               "," + std::to_string(skipped) + "\n";
  }
  const std::vector<std::string> outputs = {"coherence.csv", "summary.csv"};
  WriteFile(run.out_dir / outputs[0], csv);
  WriteFile(run.out_dir / outputs[1], summary);
  std::string hash;
  WriteManifest(run, outputs, &hash);
  std::cout << summary;
  return kExitOk;
}

namespace {

json AnalyzeTable(const std::string &path, const json &args) {
  CsvTable table = ReadCsv(path);
  const std::string score_col = args.value("score_column", "centering_score");
  const std::string f1_col = args.value("f1_column", "conll_f1");
  const int si = table.Column(score_col);
  const int fi = table.Column(f1_col);
  for (auto [idx, name] : {std::pair{si, score_col}, {fi, f1_col}}) {
    if (idx < 0) {
      throw CliError(kExitInput, path + ": no column named '" + name + "'");
    }
  }
  if (table.rows.empty()) {
    throw CliError(kExitEmpty, path + ": no data rows");
  }
  std::vector<double> scores, f1s;
  for (size_t r = 0; r < table.rows.size(); ++r) {
    scores.push_back(table.Number(r, si));
    f1s.push_back(table.Number(r, fi));
  }
  ck_analysis a;
  Check(ck_analyze(scores.data(), f1s.data(), scores.size(),
                   args.value("nbins", 0), score_col.c_str(), f1_col.c_str(),
                   &a),
        path);
  const bool bits = args.value("bits", false);
  json out;
  out["input"] = fs::path(path).filename().string();
  out["score_column"] = score_col;
  out["f1_column"] = f1_col;
  out["n"] = a.n;
  out["pearson_r"] = a.pearson_r;
  out["p_value"] = a.p_value;
  out["mi"] = bits ? a.mi / std::log(2.0) : a.mi;
  out["mi_unit"] = bits ? "bits" : "nats";
  out["nbins"] = a.nbins;
  return out;
}

}  // namespace

int RunCorrelate(const Invocation &run) {
  if (run.inputs.empty() || run.inputs.size() > 2) {
    throw CliError(kExitFailure, "correlate takes one table and at most one "
                                 "--compare table");
  }
  json report;
  report["a"] = AnalyzeTable(run.inputs[0], run.args);
  if (run.inputs.size() == 2) {
    report["b"] = AnalyzeTable(run.inputs[1], run.args);
    double p = 0.0;
    Check(ck_fisher_z_compare(report["a"]["pearson_r"].get<double>(),
                              report["a"]["n"].get<int>(),
                              report["b"]["pearson_r"].get<double>(),
                              report["b"]["n"].get<int>(), &p),
          "fisher z");
    report["fisher_z_p"] = p;
  }
  const std::vector<std::string> outputs = {"correlation.json"};
  report["manifest_hash"] = ManifestHashFor(run, outputs);
  const std::string text = report.dump(2) + "\n";
  WriteFile(run.out_dir / outputs[0], text);
  std::string hash;
  WriteManifest(run, outputs, &hash);
  std::cout << text;
  return kExitOk;
}

int RunCorefEval(const Invocation &run) {
  if (run.inputs.size() != 2) {
    throw CliError(kExitFailure, "coref-eval takes a gold and a predicted "
                                 "corpus");
  }
  CorpusPtr gold = LoadCorpus(run.inputs[0]);
  CorpusPtr pred = LoadCorpus(run.inputs[1]);
  if (ck_corpus_size(gold.get()) == 0) {
    throw CliError(kExitEmpty, "gold corpus is empty: " + run.inputs[0]);
  }
  char *text = nullptr;
  Check(ck_coref_eval(gold.get(), pred.get(), nullptr, &text));
  json report = json::parse(TakeString(text));
  const std::vector<std::string> outputs = {"coref.json"};
  report["manifest_hash"] = ManifestHashFor(run, outputs);
  const std::string dumped = report.dump(2) + "\n";
  WriteFile(run.out_dir / outputs[0], dumped);
  std::string hash;
  WriteManifest(run, outputs, &hash);
  std::cout << dumped;
  return kExitOk;
}

int RunFitRecency(const Invocation &run) {
  const std::string table_path = run.args.at("variants").get<std::string>();
  const std::string gold_path = run.args.value("gold", "");
  CsvTable table = ReadCsv(table_path);
  const int name_col = table.Column("name");
  const int path_col = table.Column("path");
  const int f1_col = table.Column("conll_f1");
  if (name_col < 0 || path_col < 0) {
    throw CliError(kExitInput,
                   table_path + ": needs 'name' and 'path' columns");
  }
  if (f1_col < 0 && gold_path.empty()) {
    throw CliError(kExitInput, table_path +
                                   ": no 'conll_f1' column; pass --gold to "
                                   "compute it");
  }
  if (table.rows.empty()) {
    throw CliError(kExitEmpty, table_path + ": no variants listed");
  }
  const fs::path base = fs::path(table_path).parent_path();
  CorpusPtr gold;
  if (!gold_path.empty()) gold = LoadCorpus(gold_path);

  const size_t n = table.rows.size();
  std::vector<std::string> names(n);
  std::vector<CorpusPtr> variants(n);
  std::vector<double> f1s(n);
  for (size_t i = 0; i < n; ++i) {
    names[i] = table.rows[i][name_col];
    fs::path p = table.rows[i][path_col];
    if (p.is_relative()) p = base / p;
    variants[i] = LoadCorpus(p.string());
    if (gold) {
      ck_coref_report report;
      Check(ck_coref_eval(gold.get(), variants[i].get(), &report, nullptr),
            names[i]);
      f1s[i] = report.conll_f1;
    } else {
      f1s[i] = table.Number(i, f1_col);
    }
  }
  std::vector<const char *> cnames;
  std::vector<const ck_corpus *> cvariants;
  for (size_t i = 0; i < n; ++i) {
    cnames.push_back(names[i].c_str());
    cvariants.push_back(variants[i].get());
  }
  ConfigPtr config = MakeConfig(run.config);
  const std::string grid_name = run.args.value("grid", "default");
  const ck_forget_grid grid =
      grid_name == "decay" ? CK_GRID_DECAY_ONLY : CK_GRID_DEFAULT;
  char *text = nullptr;
  Check(ck_fit_forget(cnames.data(), cvariants.data(), f1s.data(), n,
                      config.get(), grid, nullptr, &text),
        "fit");
  json report = json::parse(TakeString(text));

  std::string recency_csv = "id,centering_score,conll_f1\n";
  std::string vanilla_csv = recency_csv;
  for (const auto &v : report["variants"]) {
    const std::string id = v["name"].get<std::string>();
    const std::string f1 = FormatFixed(v["conll_f1"].get<double>());
    recency_csv += id + "," + FormatFixed(v["best_score"].get<double>()) +
                   "," + f1 + "\n";
    vanilla_csv += id + "," + FormatFixed(v["vanilla_score"].get<double>()) +
                   "," + f1 + "\n";
  }
  const std::vector<std::string> outputs = {"fit.json", "fit_recency.csv",
                                            "fit_vanilla.csv"};
  report["manifest_hash"] = ManifestHashFor(run, outputs);
  WriteFile(run.out_dir / outputs[0], report.dump(2) + "\n");
  WriteFile(run.out_dir / outputs[1], recency_csv);
  WriteFile(run.out_dir / outputs[2], vanilla_csv);
  std::string hash;
  WriteManifest(run, outputs, &hash);
  json brief;
  brief["best"] = report["best"];
  brief["best_pearson_r"] = report["best_pearson_r"];
  brief["vanilla_pearson_r"] = report["vanilla_pearson_r"];
  std::cout << brief.dump(2) << "\n";
  return kExitOk;
}

int RunInvocation(const Invocation &run) {
  static const std::map<std::string, int (*)(const Invocation &)> kCommands = {
      {"score", RunScore},
      {"permute", RunPermute},
      {"correlate", RunCorrelate},
      {"coref-eval", RunCorefEval},
      {"fit-recency", RunFitRecency},
  };
  auto it = kCommands.find(run.command);
  if (it == kCommands.end()) {
    throw CliError(kExitFailure, "unknown command '" + run.command + "'");
  }
  return it->second(run);
}

}  // namespace cli

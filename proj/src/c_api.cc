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

#include "centering_kit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "centering/centering.h"
#include "centering/coherence.h"
#include "centering/config.h"
#include "centering/coref_eval.h"
#include "centering/corpus.h"
#include "centering/log.h"
#include "centering/metrics.h"
#include "centering/recency.h"
#include "centering/stats.h"
#include "centering/status.h"
#include "json.hpp"

struct ck_corpus {
  std::vector<centering::Document> docs;
  std::vector<std::string> keys;
};

struct ck_config {
  centering::InstantiationConfig config;
};

namespace {

using centering::Error;
using centering::ErrorCode;

thread_local std::string last_error;

ck_status Fail(ck_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

ck_status FromCode(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return CK_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParse:
      return CK_ERR_PARSE;
    case ErrorCode::kIo:
      return CK_ERR_IO;
    case ErrorCode::kEmpty:
      return CK_ERR_EMPTY;
    case ErrorCode::kDegenerate:
      return CK_ERR_DEGENERATE;
    case ErrorCode::kPrecondition:
      return CK_ERR_PRECONDITION;
    case ErrorCode::kInternal:
      return CK_ERR_INTERNAL;
  }
  return CK_ERR_INTERNAL;
}

// Runs |body|, turning exceptions into status codes.
template <typename F>
ck_status Guard(F &&body) {
  try {
    body();
    return CK_OK;
  } catch (const Error &e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return Fail(CK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return Fail(CK_ERR_INTERNAL, e.what());
  }
}

char *CopyString(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(bool ok, const char *what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

const centering::Document &DocAt(const ck_corpus *corpus, size_t doc) {
  Require(corpus != nullptr, "null corpus");
  if (doc >= corpus->docs.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "document index " + std::to_string(doc) + " out of range");
  }
  return corpus->docs[doc];
}

ck_corpus *MakeCorpus(std::vector<centering::Document> docs) {
  auto *corpus = new ck_corpus;
  corpus->docs = std::move(docs);
  for (const auto &d : corpus->docs) corpus->keys.push_back(d.Key());
  return corpus;
}

// SRL columns, or semantic tags in the fixture layout.
bool HasSrl(const centering::Document &doc) {
  for (const auto &s : doc.sentences) {
    if (s.has_srl_columns) return true;
    for (const auto &t : s.tokens) {
      if (!t.semantic_tag.empty()) return true;
    }
  }
  return false;
}

// Discourse of |doc|, warning once per document when semantic weighting has
// nothing to work with.
centering::Discourse DiscourseFor(const centering::Document &doc,
                                  const centering::InstantiationConfig &config) {
  if (config.weighting == centering::Weighting::kSemanticRole && !HasSrl(doc)) {
    centering::LogWarning("document '" + doc.Key() +
                          "' has no SRL columns; semantic weighting falls "
                          "back to the Other rank");
  }
  return centering::BuildDiscourse(doc);
}

ck_scorecard ToC(const centering::Scorecard &s) {
  return {s.t,         s.not_nocb,   s.cheap,         s.coherence,
          s.salience,  s.kp,         s.continues,     s.retains,
          s.smooth_shifts, s.rough_shifts, s.nocbs};
}

ck_prf ToC(const centering::Prf &p) { return {p.precision, p.recall, p.f1}; }

std::string FramesJson(const std::string &key,
                       const std::vector<centering::CenteringFrame> &frames,
                       const centering::Discourse &discourse) {
  using json = nlohmann::ordered_json;
  std::string out;
  for (const auto &f : frames) {
    json j;
    j["doc_id"] = key;
    j["ordinal"] = f.ordinal;
    j["sentence"] = discourse.utterances[f.ordinal].sentence;
    j["linked"] = f.linked;
    json cf = json::array();
    for (const auto &e : f.cf) {
      cf.push_back({{"entity", e.entity}, {"weight", e.weight}});
    }
    j["cf"] = cf;
    j["cp"] = f.cp ? json(*f.cp) : json(nullptr);
    j["cb"] = f.cb ? json(*f.cb) : json(nullptr);
    j["transition"] =
        f.linked ? json(centering::ToString(f.transition)) : json(nullptr);
    out += j.dump();
    out += '\n';
  }
  return out;
}

centering::PermutationPlan FromC(const ck_plan &p) {
  centering::PermutationPlan plan;
  switch (p.mode) {
    case CK_PERMUTE_AUTO:
      plan.mode = centering::PermutationMode::kAuto;
      break;
    case CK_PERMUTE_EXHAUSTIVE:
      plan.mode = centering::PermutationMode::kExhaustive;
      break;
    case CK_PERMUTE_SAMPLED:
      plan.mode = centering::PermutationMode::kSampled;
      break;
    default:
      throw Error(ErrorCode::kInvalidArgument, "unknown permutation mode");
  }
  Require(p.sample_size >= 0, "sample size must be non-negative");
  Require(p.threshold >= 0, "threshold must be non-negative");
  plan.sample_size = p.sample_size;
  plan.threshold = p.threshold;
  plan.seed = p.seed;
  return plan;
}

centering::Metric FromC(ck_metric m) {
  Require(m >= CK_METRIC_NOCB && m <= CK_METRIC_TRAN, "unknown metric");
  return static_cast<centering::Metric>(m);
}

}  // namespace

extern "C" {

const char *ck_version(void) { return "0.1.0"; }

const char *ck_last_error_message(void) { return last_error.c_str(); }

const char *ck_status_name(ck_status status) {
  switch (status) {
    case CK_OK:
      return "ok";
    case CK_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case CK_ERR_PARSE:
      return "parse";
    case CK_ERR_IO:
      return "io";
    case CK_ERR_EMPTY:
      return "empty";
    case CK_ERR_DEGENERATE:
      return "degenerate";
    case CK_ERR_PRECONDITION:
      return "precondition";
    case CK_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

void ck_string_free(char *s) { std::free(s); }

ck_status ck_corpus_load_file(const char *path, ck_corpus **out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = MakeCorpus(centering::ParseConllFile(path));
  });
}

ck_status ck_corpus_load_string(const char *text, size_t length,
                                const char *source, ck_corpus **out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    std::string buffer(text, length);
    std::istringstream in(buffer);
    *out = MakeCorpus(
        centering::ParseConll(in, source != nullptr ? source : "<input>"));
  });
}

void ck_corpus_free(ck_corpus *corpus) { delete corpus; }

size_t ck_corpus_size(const ck_corpus *corpus) {
  return corpus == nullptr ? 0 : corpus->docs.size();
}

const char *ck_corpus_doc_key(const ck_corpus *corpus, size_t doc) {
  if (corpus == nullptr || doc >= corpus->keys.size()) return nullptr;
  return corpus->keys[doc].c_str();
}

int ck_corpus_doc_has_srl(const ck_corpus *corpus, size_t doc) {
  if (corpus == nullptr || doc >= corpus->docs.size()) return 0;
  return HasSrl(corpus->docs[doc]) ? 1 : 0;
}

ck_status ck_config_default(ck_config **out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = new ck_config;
  });
}

ck_status ck_config_from_json(const char *json, ck_config **out) {
  return Guard([&] {
    Require(json != nullptr && out != nullptr, "null argument");
    auto config = centering::ConfigFromJson(json);
    *out = new ck_config{config};
  });
}

ck_status ck_config_to_json(const ck_config *config, char **out) {
  return Guard([&] {
    Require(config != nullptr && out != nullptr, "null argument");
    *out = CopyString(centering::ConfigToJson(config->config));
  });
}

void ck_config_free(ck_config *config) { delete config; }

uint64_t ck_config_rng_seed(const ck_config *config) {
  return config == nullptr ? centering::InstantiationConfig{}.rng_seed
                           : config->config.rng_seed;
}

ck_status ck_score_document(const ck_corpus *corpus, size_t doc,
                            const ck_config *config, ck_scorecard *out) {
  return Guard([&] {
    Require(config != nullptr && out != nullptr, "null argument");
    const auto &d = DocAt(corpus, doc);
    auto frames = centering::RunConfiguredCentering(DiscourseFor(d, config->config),
                                                    config->config);
    *out = ToC(centering::ComputeScorecard(frames));
  });
}

ck_status ck_score_document_text(const ck_corpus *corpus, size_t doc,
                                 const ck_config *config, char **csv_row,
                                 char **frames_jsonl) {
  return Guard([&] {
    Require(config != nullptr, "null config");
    const auto &d = DocAt(corpus, doc);
    centering::Discourse discourse = DiscourseFor(d, config->config);
    auto frames = centering::RunConfiguredCentering(discourse, config->config);
    const std::string key = d.Key();
    std::string row = centering::ScorecardCsvRow(
        key, centering::ComputeScorecard(frames));
    std::string dump = FramesJson(key, frames, discourse);
    char *row_out = csv_row != nullptr ? CopyString(row) : nullptr;
    if (frames_jsonl != nullptr) {
      try {
        *frames_jsonl = CopyString(dump);
      } catch (...) {
        std::free(row_out);
        throw;
      }
    }
    if (csv_row != nullptr) *csv_row = row_out;
  });
}

const char *ck_scorecard_csv_header(void) {
  static const std::string header = centering::ScorecardCsvHeader();
  return header.c_str();
}

const char *ck_metric_name(ck_metric metric) {
  if (metric < CK_METRIC_NOCB || metric > CK_METRIC_TRAN) return "unknown";
  return centering::ToString(static_cast<centering::Metric>(metric));
}

ck_status ck_metric_from_name(const char *name, ck_metric *out) {
  return Guard([&] {
    Require(name != nullptr && out != nullptr, "null argument");
    auto metric = centering::MetricFromString(name);
    if (!metric) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("unknown metric '") + name + "'");
    }
    *out = static_cast<ck_metric>(*metric);
  });
}

void ck_plan_default(ck_plan *plan) {
  if (plan == nullptr) return;
  centering::PermutationPlan defaults;
  plan->mode = CK_PERMUTE_AUTO;
  plan->sample_size = defaults.sample_size;
  plan->threshold = defaults.threshold;
  plan->seed = defaults.seed;
}

ck_status ck_coherence_document(const ck_corpus *corpus, size_t doc,
                                const ck_config *config,
                                const ck_metric *metrics, size_t n_metrics,
                                const ck_plan *plan, ck_coherence_result *out) {
  return Guard([&] {
    Require(config != nullptr && plan != nullptr && out != nullptr,
            "null argument");
    Require(metrics != nullptr || n_metrics == 0, "null metric list");
    const auto &d = DocAt(corpus, doc);
    std::vector<centering::Metric> list;
    for (size_t i = 0; i < n_metrics; ++i) list.push_back(FromC(metrics[i]));
    auto results = centering::CoherenceScores(DiscourseFor(d, config->config),
                                              config->config, list,
                                              FromC(*plan));
    for (size_t i = 0; i < results.size(); ++i) {
      const auto &r = results[i];
      out[i] = {static_cast<ck_metric>(r.metric), r.n_utt, r.worse, r.equal,
                r.better, r.ch};
    }
  });
}

const char *ck_coherence_csv_header(void) {
  static const std::string header = centering::CoherenceCsvHeader();
  return header.c_str();
}

ck_status ck_coherence_csv_row(const char *doc_key,
                               const ck_coherence_result *result, char **out) {
  return Guard([&] {
    Require(doc_key != nullptr && result != nullptr && out != nullptr,
            "null argument");
    centering::CoherenceResult r;
    r.metric = FromC(result->metric);
    r.n_utt = result->n_utt;
    r.worse = result->worse;
    r.equal = result->equal;
    r.better = result->better;
    r.ch = result->ch;
    *out = CopyString(centering::CoherenceCsvRow(doc_key, r));
  });
}

ck_status ck_pearson(const double *xs, const double *ys, size_t n,
                     const char *x_name, const char *y_name, double *out) {
  return Guard([&] {
    Require(out != nullptr && ((xs != nullptr && ys != nullptr) || n == 0),
            "null argument");
    *out = centering::Pearson({xs, n}, {ys, n}, x_name ? x_name : "x",
                              y_name ? y_name : "y");
  });
}

ck_status ck_t_test_p(double r, int n, double *out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = centering::TTestP(r, n);
  });
}

ck_status ck_fisher_z_compare(double r1, int n1, double r2, int n2,
                              double *out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = centering::FisherZCompare(r1, n1, r2, n2);
  });
}

ck_status ck_mutual_information(const double *xs, const double *ys, size_t n,
                                int nbins, double *mi, int *nbins_used) {
  return Guard([&] {
    Require(mi != nullptr && ((xs != nullptr && ys != nullptr) || n == 0),
            "null argument");
    std::optional<int> bins;
    if (nbins > 0) bins = nbins;
    auto r = centering::MutualInformation({xs, n}, {ys, n}, bins);
    *mi = r.mi;
    if (nbins_used != nullptr) *nbins_used = r.nbins;
  });
}

ck_status ck_analyze(const double *scores, const double *f1s, size_t n,
                     int nbins, const char *score_name, const char *f1_name,
                     ck_analysis *out) {
  return Guard([&] {
    Require(out != nullptr && ((scores != nullptr && f1s != nullptr) || n == 0),
            "null argument");
    std::optional<int> bins;
    if (nbins > 0) bins = nbins;
    auto r = centering::Analyze({scores, n}, {f1s, n}, bins,
                                score_name ? score_name : "centering_score",
                                f1_name ? f1_name : "conll_f1");
    *out = {r.n, r.pearson_r, r.p_value, r.mi, r.nbins};
  });
}

ck_status ck_coref_eval(const ck_corpus *gold, const ck_corpus *pred,
                        ck_coref_report *report, char **json) {
  return Guard([&] {
    Require(gold != nullptr && pred != nullptr, "null corpus");
    auto r = centering::EvaluateCorpus(gold->docs, pred->docs);
    if (json != nullptr) *json = CopyString(centering::CorefReportToJson(r));
    if (report != nullptr) {
      *report = {ToC(r.muc), ToC(r.b3), ToC(r.ceaf4), r.conll_f1, r.documents};
    }
  });
}

ck_status ck_fit_forget(const char *const *names,
                        const ck_corpus *const *variants,
                        const double *conll_f1s, size_t n_variants,
                        const ck_config *config, ck_forget_grid grid,
                        ck_fit_result *result, char **report_json) {
  return Guard([&] {
    Require(config != nullptr, "null config");
    Require((variants != nullptr && conll_f1s != nullptr) || n_variants == 0,
            "null variant list");
    std::vector<centering::FitVariant> fit;
    for (size_t i = 0; i < n_variants; ++i) {
      Require(variants[i] != nullptr, "null variant corpus");
      centering::FitVariant v;
      v.name = names != nullptr && names[i] != nullptr
                   ? std::string(names[i])
                   : "variant" + std::to_string(i);
      v.conll_f1 = conll_f1s[i];
      for (const auto &d : variants[i]->docs) {
        v.discourses.push_back(DiscourseFor(d, config->config));
      }
      fit.push_back(std::move(v));
    }
    centering::ForgetGrid forget_grid;
    switch (grid) {
      case CK_GRID_DEFAULT:
        forget_grid = centering::ForgetGrid::Default();
        break;
      case CK_GRID_DECAY_ONLY:
        forget_grid = centering::ForgetGrid::DecayOnly();
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument, "unknown forget grid");
    }
    auto report = centering::FitForget(fit, config->config, forget_grid);
    if (report_json != nullptr) {
      *report_json = CopyString(centering::FitReportToJson(report));
    }
    if (result != nullptr) {
      const auto &f = report.best.forget;
      result->kind = static_cast<ck_forget_kind>(f.kind);
      result->gamma = f.gamma;
      result->a = f.a;
      result->b = f.b;
      result->best_r = report.best_r;
      result->has_vanilla_r = report.vanilla_r.has_value() ? 1 : 0;
      result->vanilla_r = report.vanilla_r.value_or(0.0);
    }
  });
}

}  // extern "C"

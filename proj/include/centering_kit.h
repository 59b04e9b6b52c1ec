/* Copyright 2026 The Centering Kit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the centering kit.
 *
 * Every fallible call returns a ck_status; on failure the message of the
 * calling thread's last error is available from ck_last_error_message()
 * until that thread's next failing call. Strings returned through char**
 * are heap-allocated and released with ck_string_free(). Handles are opaque
 * and owned by the caller.
 */

#ifndef CENTERING_KIT_H_
#define CENTERING_KIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CK_API __declspec(dllexport)
#else
#define CK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ck_status {
  CK_OK = 0,
  CK_ERR_INVALID_ARGUMENT = 1,
  CK_ERR_PARSE = 2,
  CK_ERR_IO = 3,
  CK_ERR_EMPTY = 4,
  CK_ERR_DEGENERATE = 5,
  CK_ERR_PRECONDITION = 6,
  CK_ERR_INTERNAL = 7
} ck_status;

CK_API const char *ck_version(void);
CK_API const char *ck_last_error_message(void);
CK_API const char *ck_status_name(ck_status status);
CK_API void ck_string_free(char *s);

/* ---- corpus ---------------------------------------------------------- */

typedef struct ck_corpus ck_corpus;

CK_API ck_status ck_corpus_load_file(const char *path, ck_corpus **out);
CK_API ck_status ck_corpus_load_string(const char *text, size_t length,
                                       const char *source, ck_corpus **out);
CK_API void ck_corpus_free(ck_corpus *corpus);
CK_API size_t ck_corpus_size(const ck_corpus *corpus);
/* "<doc-id>:<part>"; owned by the corpus. NULL when out of range. */
CK_API const char *ck_corpus_doc_key(const ck_corpus *corpus, size_t doc);
/* 1 if any sentence of the document carries SRL columns. */
CK_API int ck_corpus_doc_has_srl(const ck_corpus *corpus, size_t doc);

/* ---- instantiation config ------------------------------------------- */

typedef struct ck_config ck_config;

CK_API ck_status ck_config_default(ck_config **out);
CK_API ck_status ck_config_from_json(const char *json, ck_config **out);
CK_API ck_status ck_config_to_json(const ck_config *config, char **out);
CK_API void ck_config_free(ck_config *config);
CK_API uint64_t ck_config_rng_seed(const ck_config *config);

/* ---- centering and metrics ------------------------------------------ */

typedef struct ck_scorecard {
  int t;
  double not_nocb;
  double cheap;
  double coherence;
  double salience;
  double kp;
  int continues;
  int retains;
  int smooth_shifts;
  int rough_shifts;
  int nocbs;
} ck_scorecard;

CK_API ck_status ck_score_document(const ck_corpus *corpus, size_t doc,
                                   const ck_config *config,
                                   ck_scorecard *out);
/* Scorecard CSV row and the frame dump (one JSON object per line). Either
 * output pointer may be NULL. */
CK_API ck_status ck_score_document_text(const ck_corpus *corpus, size_t doc,
                                        const ck_config *config,
                                        char **csv_row, char **frames_jsonl);
CK_API const char *ck_scorecard_csv_header(void);

typedef enum ck_metric {
  CK_METRIC_NOCB = 0,
  CK_METRIC_CHEAP = 1,
  CK_METRIC_COHERENCE = 2,
  CK_METRIC_SALIENCE = 3,
  CK_METRIC_KP = 4,
  CK_METRIC_TRAN = 5
} ck_metric;

#define CK_METRIC_COUNT 6

CK_API const char *ck_metric_name(ck_metric metric);
CK_API ck_status ck_metric_from_name(const char *name, ck_metric *out);

/* ---- permutation coherence ------------------------------------------ */

typedef enum ck_permutation_mode {
  CK_PERMUTE_AUTO = 0,
  CK_PERMUTE_EXHAUSTIVE = 1,
  CK_PERMUTE_SAMPLED = 2
} ck_permutation_mode;

typedef struct ck_plan {
  ck_permutation_mode mode;
  int sample_size;
  int threshold;
  uint64_t seed;
} ck_plan;

typedef struct ck_coherence_result {
  ck_metric metric;
  int n_utt;
  long worse;
  long equal;
  long better;
  double ch;
} ck_coherence_result;

CK_API void ck_plan_default(ck_plan *plan);

/* Scores |n_metrics| metrics of one document against a shared candidate
 * set. Returns CK_ERR_PRECONDITION for a document that cannot be scored
 * (fewer than two scoreable utterances, or no transition). */
CK_API ck_status ck_coherence_document(const ck_corpus *corpus, size_t doc,
                                       const ck_config *config,
                                       const ck_metric *metrics,
                                       size_t n_metrics, const ck_plan *plan,
                                       ck_coherence_result *out);
CK_API const char *ck_coherence_csv_header(void);
CK_API ck_status ck_coherence_csv_row(const char *doc_key,
                                      const ck_coherence_result *result,
                                      char **out);

/* ---- statistics ------------------------------------------------------ */

typedef struct ck_analysis {
  int n;
  double pearson_r;
  double p_value;
  double mi; /* nats */
  int nbins;
} ck_analysis;

CK_API ck_status ck_pearson(const double *xs, const double *ys, size_t n,
                            const char *x_name, const char *y_name,
                            double *out);
CK_API ck_status ck_t_test_p(double r, int n, double *out);
CK_API ck_status ck_fisher_z_compare(double r1, int n1, double r2, int n2,
                                     double *out);
/* nbins <= 0 selects the default bin count. */
CK_API ck_status ck_mutual_information(const double *xs, const double *ys,
                                       size_t n, int nbins, double *mi,
                                       int *nbins_used);
CK_API ck_status ck_analyze(const double *scores, const double *f1s,
                            size_t n, int nbins, const char *score_name,
                            const char *f1_name, ck_analysis *out);

/* ---- coreference evaluation ----------------------------------------- */

typedef struct ck_prf {
  double precision;
  double recall;
  double f1;
} ck_prf;

typedef struct ck_coref_report {
  ck_prf muc;
  ck_prf b3;
  ck_prf ceaf4;
  double conll_f1;
  int documents;
} ck_coref_report;

/* Either output may be NULL. */
CK_API ck_status ck_coref_eval(const ck_corpus *gold, const ck_corpus *pred,
                               ck_coref_report *report, char **json);

/* ---- recency fit ----------------------------------------------------- */

typedef enum ck_forget_grid {
  CK_GRID_DEFAULT = 0,   /* exponential decay and affine */
  CK_GRID_DECAY_ONLY = 1
} ck_forget_grid;

typedef enum ck_forget_kind {
  CK_FORGET_ZERO = 0,
  CK_FORGET_EXPONENTIAL_DECAY = 1,
  CK_FORGET_AFFINE = 2
} ck_forget_kind;

typedef struct ck_fit_result {
  ck_forget_kind kind;
  double gamma;
  double a;
  double b;
  double best_r;
  int has_vanilla_r;
  double vanilla_r;
} ck_fit_result;

/* Each variant is a corpus carrying one mention->entity clustering of the
 * same documents, paired with its CoNLL F1. Either output may be NULL. */
CK_API ck_status ck_fit_forget(const char *const *names,
                               const ck_corpus *const *variants,
                               const double *conll_f1s, size_t n_variants,
                               const ck_config *config, ck_forget_grid grid,
                               ck_fit_result *result, char **report_json);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* CENTERING_KIT_H_ */

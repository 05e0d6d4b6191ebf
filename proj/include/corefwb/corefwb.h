// Copyright 2026 The Corefwb Authors.
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

/* C interface of the coreference workbench.
 *
 * Every object is an opaque handle created by a *_parse / *_load / *_new
 * function and released with the matching *_free. Functions return a
 * cfw_status; on failure the out-parameters are untouched and
 * cfw_last_error() describes the problem (thread-local, valid until the next
 * failing call on the same thread). Strings returned through `char **` are
 * NUL-terminated, heap-allocated, and released with cfw_string_free().
 * A NULL cfw_config argument stands for the default configuration.
 */
#ifndef COREFWB_COREFWB_H_
#define COREFWB_COREFWB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COREFWB_BUILDING_LIBRARY)
#    define COREFWB_API __declspec(dllexport)
#  else
#    define COREFWB_API __declspec(dllimport)
#  endif
#else
#  define COREFWB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cfw_status {
  CFW_OK = 0,
  CFW_ERR_INVALID_ARGUMENT = 1,  /* null handle, bad option value */
  CFW_ERR_PARSE = 2,             /* malformed corpus/semnet/partition/config */
  CFW_ERR_FORMAT = 3,            /* structurally invalid partition or document */
  CFW_ERR_DUPLICATE_ID = 4,
  CFW_ERR_OVERLAP = 5,
  CFW_ERR_INCOMPLETE_KEY = 6,
  CFW_ERR_CYCLE = 7,
  CFW_ERR_UNKNOWN_CONCEPT = 8,
  CFW_ERR_UNIVERSE_MISMATCH = 9,
  CFW_ERR_SEQUENCING = 10,
  CFW_ERR_SIZE_BOUND = 11,
  CFW_ERR_IO = 12,
  CFW_ERR_INTERNAL = 13
} cfw_status;

typedef enum cfw_method {
  CFW_METHOD_MUC = 0,
  CFW_METHOD_CORE_MR = 1,
  CFW_METHOD_EX_CORE_MR = 2
} cfw_method;

typedef enum cfw_ablation_mode {
  CFW_ABLATE_FULL_GRID = 0,
  CFW_ABLATE_ENDPOINTS = 1
} cfw_ablation_mode;

typedef enum cfw_format {
  CFW_FORMAT_TSV = 0,
  CFW_FORMAT_MARKDOWN = 1
} cfw_format;

typedef struct cfw_document cfw_document;
typedef struct cfw_semnet cfw_semnet;
typedef struct cfw_partition cfw_partition;
typedef struct cfw_config cfw_config;

typedef struct cfw_stats {
  size_t words;
  size_t res;
  size_t key_mrs;
  int key_complete;
  double re_per_mr;
  size_t nominal_res;
  size_t pronoun_res;
  size_t unparsed_res;
} cfw_stats;

/* Recall and precision are also given as exact fractions. */
typedef struct cfw_score {
  cfw_method method;
  double recall;
  double precision;
  double f_measure;
  int64_t recall_num, recall_den;
  int64_t precision_num, precision_den;
} cfw_score;

typedef struct cfw_optimize_options {
  cfw_method method;
  uint64_t seed;
  size_t max_iters;
  size_t patience;
} cfw_optimize_options;

COREFWB_API const char *cfw_version(void);
COREFWB_API const char *cfw_last_error(void);
COREFWB_API void cfw_string_free(char *s);

/* Corpus documents. */
COREFWB_API cfw_status cfw_document_parse(const char *text, size_t len, cfw_document **out);
COREFWB_API cfw_status cfw_document_load(const char *path, cfw_document **out);
COREFWB_API void cfw_document_free(cfw_document *doc);
COREFWB_API size_t cfw_document_re_count(const cfw_document *doc);
COREFWB_API cfw_status cfw_document_stats(const cfw_document *doc, cfw_stats *out);
/* `name<TAB>value` lines. */
COREFWB_API cfw_status cfw_document_stats_text(const cfw_document *doc, char **out);
COREFWB_API cfw_status cfw_document_key(const cfw_document *doc, cfw_partition **out);

/* Semantic networks. */
COREFWB_API cfw_status cfw_semnet_parse(const char *text, size_t len, cfw_semnet **out);
COREFWB_API cfw_status cfw_semnet_load(const char *path, cfw_semnet **out);
COREFWB_API void cfw_semnet_free(cfw_semnet *net);
COREFWB_API cfw_status cfw_semnet_subsumed(const cfw_semnet *net, const char *a, const char *b,
                                           int *out);
COREFWB_API cfw_status cfw_semnet_compatible(const cfw_semnet *net, const char *a, const char *b,
                                             int *out);

/* Partitions (keys and responses). */
COREFWB_API cfw_status cfw_partition_parse(const char *text, size_t len, cfw_partition **out);
COREFWB_API cfw_status cfw_partition_load(const char *path, cfw_partition **out);
COREFWB_API void cfw_partition_free(cfw_partition *p);
COREFWB_API size_t cfw_partition_size(const cfw_partition *p);
COREFWB_API size_t cfw_partition_group_count(const cfw_partition *p);
/* Canonical text form. */
COREFWB_API cfw_status cfw_partition_serialize(const cfw_partition *p, char **out);

/* Solver configurations. */
COREFWB_API cfw_status cfw_config_new_default(cfw_config **out);
COREFWB_API cfw_status cfw_config_parse(const char *text, size_t len, cfw_config **out);
COREFWB_API cfw_status cfw_config_load(const char *path, cfw_config **out);
COREFWB_API void cfw_config_free(cfw_config *cfg);
/* Same key/value syntax as the config file. */
COREFWB_API cfw_status cfw_config_set(cfw_config *cfg, const char *key, const char *value);
COREFWB_API cfw_status cfw_config_serialize(const cfw_config *cfg, char **out);

/* Resolution. `trace_out` may be NULL. */
COREFWB_API cfw_status cfw_resolve(const cfw_document *doc, const cfw_semnet *net,
                                   const cfw_config *cfg, cfw_partition **partition_out,
                                   char **trace_out);

/* Scoring. */
COREFWB_API cfw_status cfw_score_partitions(const cfw_partition *key, const cfw_partition *response,
                                            cfw_method method, cfw_score *out);
/* One `method<TAB>recall<TAB>precision<TAB>f` row per requested method,
 * percentages with four decimals. */
COREFWB_API cfw_status cfw_score_report(const cfw_partition *key, const cfw_partition *response,
                                        const cfw_method *methods, size_t num_methods,
                                        char **out);

/* Rule ablation. `rules` is a comma-separated list of RG, RN, RS,
 * FORCE_CREATE_INDEF, FORCE_ASSOC_DEF; the listed rules are switched on in
 * `cfg` to form the baseline. */
COREFWB_API cfw_status cfw_ablate(const cfw_document *doc, const cfw_semnet *net,
                                  const cfw_config *cfg, const char *rules,
                                  cfw_ablation_mode mode, cfw_method method, cfw_format format,
                                  char **report_out);

/* Parameter optimization. `best_out` and `trace_out` may be NULL. */
COREFWB_API cfw_status cfw_optimize(const cfw_document *doc, const cfw_semnet *net,
                                    const cfw_config *cfg, const cfw_optimize_options *options,
                                    cfw_format format, cfw_config **best_out, char **trace_out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* COREFWB_COREFWB_H_ */

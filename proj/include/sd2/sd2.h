/* Copyright 2026 the sd2 authors
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

/* C interface to the sd2 scholarly-analysis engine.
 *
 * Every fallible call returns an sd2_status; on failure a thread-local
 * message is available from sd2_last_error(). Handles are opaque and must be
 * released with the matching *_free function. Strings returned through
 * `char**` out-parameters are heap-allocated and released with
 * sd2_string_free(). A set keeps its corpus alive, so a corpus may be freed
 * while sets derived from it are still in use.
 */

#ifndef SD2_SD2_H_
#define SD2_SD2_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SD2_API __declspec(dllexport)
#else
#define SD2_API __attribute__((visibility("default")))
#endif

typedef enum sd2_status {
  SD2_OK = 0,
  SD2_FILE_NOT_READABLE = 1,
  SD2_SCHEMA_VIOLATION = 2,
  SD2_DUPLICATE_PAPER_ID = 3,
  SD2_UNKNOWN_PAPER_ID = 4,
  SD2_UNKNOWN_SCHOLAR_ID = 5,
  SD2_UNKNOWN_VENUE_ID = 6,
  SD2_NO_POSITIVE_SELECTOR = 7,
  SD2_INVALID_RANGE = 8,
  SD2_INVALID_THRESHOLDS = 9,
  SD2_INVALID_ATTRIBUTE_FOR_MODE = 10,
  SD2_CHAIN_TOO_LONG = 11,
  SD2_REPEATED_ATTRIBUTE = 12,
  SD2_INVALID_GROUP_SPEC = 13,
  SD2_CHAIN_MISMATCH = 14,
  SD2_OFFSET_ON_UNORDERED_ATTRIBUTE = 15,
  SD2_NEGATIVE_VALUE = 16,
  SD2_PARSE_ERROR = 17,
  SD2_PORT_IN_USE = 18,
  SD2_INVALID_ARGUMENT = 19,
  SD2_UNKNOWN_HANDLE = 20,
  SD2_INTERNAL = 21
} sd2_status;

typedef enum sd2_scale {
  SD2_SCALE_LINEAR = 0,
  SD2_SCALE_SQRT = 1,
  SD2_SCALE_LOG = 2
} sd2_scale;

typedef struct sd2_corpus sd2_corpus;
typedef struct sd2_set sd2_set;
typedef struct sd2_server sd2_server;

typedef struct sd2_metrics {
  uint64_t paper_count;
  uint64_t total_citations;
  uint64_t h_index;
} sd2_metrics;

SD2_API const char* sd2_version(void);
/* "Ok", "FileNotReadable", ... */
SD2_API const char* sd2_status_name(sd2_status status);
/* Message of the last failure on this thread; "" when none. */
SD2_API const char* sd2_last_error(void);
SD2_API void sd2_string_free(char* s);

/* Corpus. */
SD2_API sd2_status sd2_corpus_load(const char* papers_path,
                                   const char* citations_path,
                                   const char* venues_path,
                                   const char* profiles_path,
                                   sd2_corpus** out);
SD2_API sd2_status sd2_corpus_open_store(const char* store_path,
                                         sd2_corpus** out);
SD2_API sd2_status sd2_corpus_write_store(const sd2_corpus* corpus,
                                          const char* store_path);
SD2_API sd2_status sd2_corpus_load_report(const sd2_corpus* corpus,
                                          char** out_json);
SD2_API size_t sd2_corpus_paper_count(const sd2_corpus* corpus);
SD2_API size_t sd2_corpus_link_count(const sd2_corpus* corpus);
SD2_API void sd2_corpus_free(sd2_corpus* corpus);

/* Paper sets. */
SD2_API sd2_status sd2_set_from_expression(const sd2_corpus* corpus,
                                           const char* expression,
                                           sd2_set** out);
/* {"labels": {"<scholar_id>": "not"|"ignore"|"and"|"or"}} */
SD2_API sd2_status sd2_set_from_spec_json(const sd2_corpus* corpus,
                                          const char* spec_json,
                                          sd2_set** out);
SD2_API sd2_status sd2_set_filter_years(const sd2_set* set, int from_year,
                                        int to_year, sd2_set** out);
SD2_API size_t sd2_set_size(const sd2_set* set);
/* Owned by the set; valid until sd2_set_free. */
SD2_API const char* sd2_set_label(const sd2_set* set);
SD2_API sd2_status sd2_set_metrics(const sd2_set* set, sd2_metrics* out);
SD2_API sd2_status sd2_set_timeline_json(const sd2_set* set, char** out_json);
/* Builds a hierarchical histogram from a JSON query
 * {"mode", "chain", "groups", "measure", "thresholds", "scale", ...}. */
SD2_API sd2_status sd2_set_hierarchy_json(const sd2_set* set,
                                          const char* query_json,
                                          char** out_json);
SD2_API sd2_status sd2_set_hierarchy_csv(const sd2_set* set,
                                         const char* query_json,
                                         char** out_csv);
SD2_API void sd2_set_free(sd2_set* set);

/* Metrics and scales. */
SD2_API sd2_status sd2_h_index(const uint64_t* counts, size_t n, uint64_t* out);
SD2_API sd2_status sd2_scale_heights(const double* values, size_t n,
                                     sd2_scale scale, double* out);

/* JSON service. */
SD2_API sd2_status sd2_server_create(const sd2_corpus* corpus,
                                     sd2_server** out);
/* In-process request; *out_json receives the response body. */
SD2_API sd2_status sd2_server_request(sd2_server* server, const char* method,
                                      const char* path, const char* body,
                                      int* http_status, char** out_json);
/* Serves on a background thread. port 0 picks a free port. */
SD2_API sd2_status sd2_server_start(sd2_server* server, const char* host,
                                    int port, int* bound_port);
/* Serves on the calling thread until sd2_server_stop. */
SD2_API sd2_status sd2_server_run(sd2_server* server, const char* host,
                                  int port);
SD2_API void sd2_server_stop(sd2_server* server);
SD2_API void sd2_server_free(sd2_server* server);

#ifdef __cplusplus
}
#endif

#endif /* SD2_SD2_H_ */

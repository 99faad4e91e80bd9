// Copyright 2026 the sd2 authors
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

#include "sd2/sd2.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "core/codec.h"
#include "core/corpus.h"
#include "core/error.h"
#include "core/expression.h"
#include "core/hist_engine.h"
#include "core/metrics.h"
#include "core/scholar_sets.h"
#include "core/service.h"
#include "core/store.h"

struct sd2_corpus {
  std::shared_ptr<const sd2::Corpus> corpus;
};

struct sd2_set {
  std::shared_ptr<const sd2::Corpus> corpus;
  sd2::PaperSet set;
};

struct sd2_server {
  std::unique_ptr<sd2::Service> service;
};

namespace {

thread_local std::string last_error;

sd2_status Fail(sd2::ErrorCode code, const std::string& message) {
  last_error = message;
  return static_cast<sd2_status>(code);
}

template <typename Fn>
sd2_status Guard(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return SD2_OK;
  } catch (const sd2::Error& e) {
    return Fail(e.code(), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(sd2::ErrorCode::kInternal, "out of memory");
  } catch (const std::exception& e) {
    return Fail(sd2::ErrorCode::kInternal, e.what());
  }
}

void Require(bool ok, const char* what) {
  if (!ok) {
    throw sd2::Error(sd2::ErrorCode::kInvalidArgument,
                     std::string("null argument: ") + what);
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

sd2::HierarchyQuery ParseQuery(const char* query_json) {
  Require(query_json != nullptr, "query_json");
  auto doc = nlohmann::json::parse(query_json, nullptr, false);
  if (doc.is_discarded()) {
    throw sd2::Error(sd2::ErrorCode::kParseError, "query is not valid JSON");
  }
  return sd2::QueryFromJson(doc);
}

}  // namespace

extern "C" {

const char* sd2_version(void) { return "1.0.0"; }

const char* sd2_status_name(sd2_status status) {
  const int code = static_cast<int>(status);
  if (code < 0 || code > static_cast<int>(sd2::ErrorCode::kInternal)) {
    return "Unknown";
  }
  return sd2::ErrorCodeName(static_cast<sd2::ErrorCode>(code)).data();
}

const char* sd2_last_error(void) { return last_error.c_str(); }

void sd2_string_free(char* s) { std::free(s); }

sd2_status sd2_corpus_load(const char* papers_path, const char* citations_path,
                           const char* venues_path, const char* profiles_path,
                           sd2_corpus** out) {
  return Guard([&] {
    Require(papers_path && citations_path && venues_path && profiles_path,
            "path");
    Require(out != nullptr, "out");
    sd2::CorpusPaths paths{papers_path, citations_path, venues_path,
                           profiles_path};
    auto corpus = std::make_shared<const sd2::Corpus>(sd2::Corpus::Load(paths));
    *out = new sd2_corpus{std::move(corpus)};
  });
}

sd2_status sd2_corpus_open_store(const char* store_path, sd2_corpus** out) {
  return Guard([&] {
    Require(store_path != nullptr, "store_path");
    Require(out != nullptr, "out");
    auto corpus = std::make_shared<const sd2::Corpus>(sd2::ReadStore(store_path));
    *out = new sd2_corpus{std::move(corpus)};
  });
}

sd2_status sd2_corpus_write_store(const sd2_corpus* corpus,
                                  const char* store_path) {
  return Guard([&] {
    Require(corpus != nullptr, "corpus");
    Require(store_path != nullptr, "store_path");
    sd2::WriteStore(*corpus->corpus, store_path);
  });
}

sd2_status sd2_corpus_load_report(const sd2_corpus* corpus, char** out_json) {
  return Guard([&] {
    Require(corpus != nullptr, "corpus");
    Require(out_json != nullptr, "out_json");
    *out_json = Dup(corpus->corpus->report().ToJson().dump(2) + "\n");
  });
}

size_t sd2_corpus_paper_count(const sd2_corpus* corpus) {
  return corpus ? corpus->corpus->paper_count() : 0;
}

size_t sd2_corpus_link_count(const sd2_corpus* corpus) {
  return corpus ? corpus->corpus->link_count() : 0;
}

void sd2_corpus_free(sd2_corpus* corpus) { delete corpus; }

sd2_status sd2_set_from_expression(const sd2_corpus* corpus,
                                   const char* expression, sd2_set** out) {
  return Guard([&] {
    Require(corpus != nullptr, "corpus");
    Require(expression != nullptr, "expression");
    Require(out != nullptr, "out");
    const sd2::Corpus& c = *corpus->corpus;
    sd2::PaperSet set = sd2::Combine(c, sd2::ParseExpression(c, expression));
    *out = new sd2_set{corpus->corpus, std::move(set)};
  });
}

sd2_status sd2_set_from_spec_json(const sd2_corpus* corpus,
                                  const char* spec_json, sd2_set** out) {
  return Guard([&] {
    Require(corpus != nullptr, "corpus");
    Require(spec_json != nullptr, "spec_json");
    Require(out != nullptr, "out");
    auto doc = nlohmann::json::parse(spec_json, nullptr, false);
    if (doc.is_discarded()) {
      throw sd2::Error(sd2::ErrorCode::kParseError, "spec is not valid JSON");
    }
    sd2::PaperSet set = sd2::Combine(*corpus->corpus, sd2::SpecFromJson(doc));
    *out = new sd2_set{corpus->corpus, std::move(set)};
  });
}

sd2_status sd2_set_filter_years(const sd2_set* set, int from_year, int to_year,
                                sd2_set** out) {
  return Guard([&] {
    Require(set != nullptr, "set");
    Require(out != nullptr, "out");
    sd2::PaperSet filtered =
        sd2::FilterYears(*set->corpus, set->set, from_year, to_year);
    *out = new sd2_set{set->corpus, std::move(filtered)};
  });
}

size_t sd2_set_size(const sd2_set* set) { return set ? set->set.size() : 0; }

const char* sd2_set_label(const sd2_set* set) {
  return set ? set->set.label.c_str() : "";
}

sd2_status sd2_set_metrics(const sd2_set* set, sd2_metrics* out) {
  return Guard([&] {
    Require(set != nullptr, "set");
    Require(out != nullptr, "out");
    const sd2::SetMetrics m = sd2::ComputeSetMetrics(*set->corpus, set->set);
    *out = sd2_metrics{m.paper_count, m.total_citations, m.h_index};
  });
}

sd2_status sd2_set_timeline_json(const sd2_set* set, char** out_json) {
  return Guard([&] {
    Require(set != nullptr, "set");
    Require(out_json != nullptr, "out_json");
    *out_json = Dup(
        sd2::TimelineToJson(sd2::ComputeTimeline(*set->corpus, set->set)).dump());
  });
}

sd2_status sd2_set_hierarchy_json(const sd2_set* set, const char* query_json,
                                  char** out_json) {
  return Guard([&] {
    Require(set != nullptr, "set");
    Require(out_json != nullptr, "out_json");
    const sd2::HierarchyQuery query = ParseQuery(query_json);
    const sd2::Hierarchy h =
        sd2::BuildHierarchy(*set->corpus, set->set, query.request);
    *out_json = Dup(sd2::HierarchyToJson(*set->corpus, h, query.scale,
                                         query.max_element_ids)
                        .dump());
  });
}

sd2_status sd2_set_hierarchy_csv(const sd2_set* set, const char* query_json,
                                 char** out_csv) {
  return Guard([&] {
    Require(set != nullptr, "set");
    Require(out_csv != nullptr, "out_csv");
    const sd2::HierarchyQuery query = ParseQuery(query_json);
    const sd2::Hierarchy h =
        sd2::BuildHierarchy(*set->corpus, set->set, query.request);
    *out_csv = Dup(sd2::HierarchyToCsv(h, query.scale));
  });
}

void sd2_set_free(sd2_set* set) { delete set; }

sd2_status sd2_h_index(const uint64_t* counts, size_t n, uint64_t* out) {
  return Guard([&] {
    Require(counts != nullptr || n == 0, "counts");
    Require(out != nullptr, "out");
    *out = sd2::HIndex(std::span<const uint64_t>(counts, n));
  });
}

sd2_status sd2_scale_heights(const double* values, size_t n, sd2_scale scale,
                             double* out) {
  return Guard([&] {
    Require(values != nullptr || n == 0, "values");
    Require(out != nullptr || n == 0, "out");
    if (scale < SD2_SCALE_LINEAR || scale > SD2_SCALE_LOG) {
      throw sd2::Error(sd2::ErrorCode::kInvalidArgument, "unknown scale");
    }
    const auto kind = static_cast<sd2::ScaleKind>(scale);
    // Validate everything before writing so `out` is untouched on failure.
    std::vector<double> heights =
        sd2::ScaleHeights(std::span<const double>(values, n), kind);
    std::copy(heights.begin(), heights.end(), out);
  });
}

sd2_status sd2_server_create(const sd2_corpus* corpus, sd2_server** out) {
  return Guard([&] {
    Require(corpus != nullptr, "corpus");
    Require(out != nullptr, "out");
    *out = new sd2_server{std::make_unique<sd2::Service>(corpus->corpus)};
  });
}

sd2_status sd2_server_request(sd2_server* server, const char* method,
                              const char* path, const char* body,
                              int* http_status, char** out_json) {
  return Guard([&] {
    Require(server && method && path, "server/method/path");
    Require(http_status && out_json, "out");
    sd2::Response r = server->service->Handle(method, path, body ? body : "");
    *http_status = r.status;
    *out_json = Dup(r.body.dump());
  });
}

sd2_status sd2_server_start(sd2_server* server, const char* host, int port,
                            int* bound_port) {
  return Guard([&] {
    Require(server != nullptr, "server");
    const int bound = server->service->Start(host ? host : "127.0.0.1", port);
    if (bound_port) *bound_port = bound;
  });
}

sd2_status sd2_server_run(sd2_server* server, const char* host, int port) {
  return Guard([&] {
    Require(server != nullptr, "server");
    server->service->Run(host ? host : "127.0.0.1", port);
  });
}

void sd2_server_stop(sd2_server* server) {
  if (server) server->service->Stop();
}

void sd2_server_free(sd2_server* server) { delete server; }

}  // extern "C"

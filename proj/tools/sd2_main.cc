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

// sd2 command line: ingest a corpus snapshot, run offline queries, serve the
// JSON API. Talks to the engine only through the C API.
//
// Exit codes: 0 ok, 2 missing/unreadable input, 3 duplicate paper id,
// 4 malformed expression or chain, 1 anything else.

#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sd2/sd2.h"

namespace {

int ExitCodeFor(sd2_status status) {
  switch (status) {
    case SD2_OK: return 0;
    case SD2_FILE_NOT_READABLE: return 2;
    case SD2_DUPLICATE_PAPER_ID: return 3;
    case SD2_PARSE_ERROR: return 4;
    default: return 1;
  }
}

int Report(sd2_status status) {
  if (status != SD2_OK) {
    std::cerr << "sd2: " << sd2_status_name(status) << ": " << sd2_last_error()
              << "\n";
  }
  return ExitCodeFor(status);
}

// Takes ownership of a C string from the library.
std::string Take(char* s) {
  std::string out = s ? s : "";
  sd2_string_free(s);
  return out;
}

std::optional<std::string> Env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

struct IngestArgs {
  std::string papers, citations, venues, profiles, out, report;
};

int RunIngest(const IngestArgs& a) {
  sd2_corpus* corpus = nullptr;
  sd2_status st = sd2_corpus_load(a.papers.c_str(), a.citations.c_str(),
                                  a.venues.c_str(), a.profiles.c_str(), &corpus);
  if (st != SD2_OK) return Report(st);
  st = sd2_corpus_write_store(corpus, a.out.c_str());
  char* report = nullptr;
  if (st == SD2_OK) st = sd2_corpus_load_report(corpus, &report);
  if (st == SD2_OK) {
    const std::string text = Take(report);
    if (a.report.empty()) {
      std::cerr << text;
    } else {
      std::ofstream f(a.report, std::ios::binary);
      f << text;
      if (!f) {
        std::cerr << "sd2: cannot write report " << a.report << "\n";
        sd2_corpus_free(corpus);
        return 1;
      }
    }
    std::cerr << "sd2: wrote " << sd2_corpus_paper_count(corpus) << " papers, "
              << sd2_corpus_link_count(corpus) << " links to " << a.out << "\n";
  }
  sd2_corpus_free(corpus);
  return Report(st);
}

struct QueryArgs {
  std::string store, expr, mode = "papers", chain = "P.Year",
      measure = "papers", format = "json", groups, scale = "linear";
  std::optional<uint64_t> low, high;
  size_t max_ids = 100;
};

int RunQuery(const QueryArgs& a) {
  nlohmann::json query = {{"mode", a.mode},
                          {"chain", a.chain},
                          {"measure", a.measure},
                          {"scale", a.scale},
                          {"max_element_ids", a.max_ids}};
  if (!a.groups.empty()) {
    auto groups = nlohmann::json::parse(a.groups, nullptr, false);
    if (groups.is_discarded()) {
      std::cerr << "sd2: ParseError: --groups is not valid JSON\n";
      return 4;
    }
    query["groups"] = groups;
  }
  if (a.low || a.high) {
    nlohmann::json t = nlohmann::json::object();
    if (a.low) t["low_below"] = *a.low;
    if (a.high) t["high_at_least"] = *a.high;
    query["thresholds"] = t;
  }

  std::string store = a.store;
  if (store.empty()) store = Env("SD2_STORE").value_or("");
  if (store.empty()) {
    std::cerr << "sd2: no store given (--store or SD2_STORE)\n";
    return 2;
  }
  sd2_corpus* corpus = nullptr;
  sd2_status st = sd2_corpus_open_store(store.c_str(), &corpus);
  if (st != SD2_OK) return Report(st);
  sd2_set* set = nullptr;
  st = sd2_set_from_expression(corpus, a.expr.c_str(), &set);
  if (st == SD2_OK) {
    char* out = nullptr;
    const std::string q = query.dump();
    st = a.format == "csv" ? sd2_set_hierarchy_csv(set, q.c_str(), &out)
                           : sd2_set_hierarchy_json(set, q.c_str(), &out);
    if (st == SD2_OK) {
      std::cout << Take(out);
      if (a.format != "csv") std::cout << "\n";
    }
    sd2_set_free(set);
  }
  sd2_corpus_free(corpus);
  return Report(st);
}

sd2_server* g_server = nullptr;

extern "C" void OnSignal(int) {
  if (g_server) sd2_server_stop(g_server);
}

int RunServe(std::string store, std::string host, std::optional<int> port) {
  if (store.empty()) store = Env("SD2_STORE").value_or("");
  if (store.empty()) {
    std::cerr << "sd2: no store given (--store or SD2_STORE)\n";
    return 2;
  }
  if (!port) {
    auto env = Env("SD2_PORT");
    port = env ? std::atoi(env->c_str()) : 8642;
  }
  sd2_corpus* corpus = nullptr;
  sd2_status st = sd2_corpus_open_store(store.c_str(), &corpus);
  if (st != SD2_OK) return Report(st);
  st = sd2_server_create(corpus, &g_server);
  sd2_corpus_free(corpus);
  if (st != SD2_OK) return Report(st);
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);
  std::cerr << "sd2: serving " << store << " on " << host << ":" << *port
            << "\n";
  st = sd2_server_run(g_server, host.c_str(), *port);
  sd2_server* server = g_server;
  g_server = nullptr;
  sd2_server_free(server);
  return Report(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sd2: scholarly performance analysis engine"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sd2_version());

  IngestArgs ingest;
  CLI::App* ing = app.add_subcommand("ingest", "Load input files into a store");
  ing->add_option("--papers", ingest.papers, "papers JSON Lines")->required();
  ing->add_option("--citations", ingest.citations, "citations CSV")->required();
  ing->add_option("--venues", ingest.venues, "venue alias JSON")->required();
  ing->add_option("--profiles", ingest.profiles, "scholar profiles JSON Lines")
      ->required();
  ing->add_option("--out", ingest.out, "store output path")->required();
  ing->add_option("--report", ingest.report,
                  "load report output path (default: stderr)");

  QueryArgs query;
  CLI::App* qry = app.add_subcommand("query", "Build a hierarchy offline");
  qry->add_option("--store", query.store, "store path (default: $SD2_STORE)");
  qry->add_option("--expr", query.expr, "combination expression, e.g. \"A + B - C\"")
      ->required();
  qry->add_option("--mode", query.mode, "papers | citations")
      ->check(CLI::IsMember({"papers", "citations"}));
  qry->add_option("--chain", query.chain, "attribute chain, e.g. P.Year,P.Venue");
  qry->add_option("--measure", query.measure, "papers | citations | h_index");
  qry->add_option("--groups", query.groups, "grouping specs as a JSON array");
  qry->add_option("--low", query.low, "citation bucket: Low below this count");
  qry->add_option("--high", query.high, "citation bucket: High from this count");
  qry->add_option("--scale", query.scale, "linear | sqrt | log");
  qry->add_option("--max-element-ids", query.max_ids, "element ids per leaf");
  qry->add_option("--format", query.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string serve_store, host = "127.0.0.1";
  std::optional<int> port;
  CLI::App* srv = app.add_subcommand("serve", "Serve the JSON API");
  srv->add_option("--store", serve_store, "store path (default: $SD2_STORE)");
  srv->add_option("--host", host, "bind address");
  srv->add_option("--port", port, "port (default: $SD2_PORT or 8642)");

  CLI11_PARSE(app, argc, argv);

  if (*ing) return RunIngest(ingest);
  if (*qry) return RunQuery(query);
  return RunServe(serve_store, host, port);
}

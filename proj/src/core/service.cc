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

#include "core/service.h"

#include <charconv>
#include <exception>

#include "core/codec.h"
#include "core/hist_engine.h"
#include "core/metrics.h"
#include "core/scholar_sets.h"
#include "httplib.h"

namespace sd2 {

namespace {

using nlohmann::json;

std::vector<std::string> Segments(const std::string& path) {
  std::vector<std::string> out;
  std::string current;
  const size_t end = path.find('?');
  for (size_t i = 0; i < std::min(end, path.size()); ++i) {
    if (path[i] == '/') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(path[i]);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

[[noreturn]] void BadBody(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

const json& RequireObject(const json& body) {
  if (!body.is_object()) BadBody("request body must be a JSON object");
  return body;
}

int IntField(const json& body, const char* name, std::optional<int> fallback) {
  auto it = body.find(name);
  if (it == body.end() || it->is_null()) {
    if (!fallback) BadBody(std::string("missing integer field '") + name + "'");
    return *fallback;
  }
  if (!it->is_number_integer()) {
    BadBody(std::string("'") + name + "' must be an integer");
  }
  return it->get<int>();
}

bool BoolField(const json& body, const char* name, bool fallback) {
  auto it = body.find(name);
  if (it == body.end() || it->is_null()) return fallback;
  if (!it->is_boolean()) BadBody(std::string("'") + name + "' must be a boolean");
  return it->get<bool>();
}

struct NotFound {};

}  // namespace

std::string_view SetRoleName(SetRole role) {
  switch (role) {
    case SetRole::kUpper: return "upper";
    case SetRole::kLower: return "lower";
    case SetRole::kUnassigned: return "unassigned";
  }
  return "unassigned";
}

std::optional<SetRole> ParseSetRole(std::string_view name) {
  if (name == "upper") return SetRole::kUpper;
  if (name == "lower") return SetRole::kLower;
  if (name == "unassigned") return SetRole::kUnassigned;
  return std::nullopt;
}

uint64_t SessionSetRegistry::Key(const std::string& handle) const {
  uint64_t key = 0;
  if (handle.size() > 1 && handle[0] == 's') {
    auto [ptr, ec] =
        std::from_chars(handle.data() + 1, handle.data() + handle.size(), key);
    if (ec == std::errc() && ptr == handle.data() + handle.size() &&
        sets_.contains(key)) {
      return key;
    }
  }
  throw Error(ErrorCode::kUnknownHandle, "no set with handle '" + handle + "'");
}

std::string SessionSetRegistry::Add(PaperSet set) {
  std::lock_guard lock(mu_);
  const uint64_t key = next_++;
  RegisteredSet entry;
  entry.handle = "s" + std::to_string(key);
  entry.set = std::make_shared<const PaperSet>(std::move(set));
  sets_.emplace(key, entry);
  return entry.handle;
}

RegisteredSet SessionSetRegistry::Get(const std::string& handle) const {
  std::lock_guard lock(mu_);
  return sets_.at(Key(handle));
}

void SessionSetRegistry::Remove(const std::string& handle) {
  std::lock_guard lock(mu_);
  sets_.erase(Key(handle));
}

void SessionSetRegistry::AssignRole(const std::string& handle, SetRole role) {
  std::lock_guard lock(mu_);
  RegisteredSet& target = sets_.at(Key(handle));
  if (role != SetRole::kUnassigned) {
    for (auto& [key, entry] : sets_) {
      if (entry.role == role) entry.role = SetRole::kUnassigned;
    }
  }
  target.role = role;
}

std::vector<RegisteredSet> SessionSetRegistry::List() const {
  std::lock_guard lock(mu_);
  std::vector<RegisteredSet> out;
  for (const auto& [key, entry] : sets_) out.push_back(entry);
  return out;
}

json ErrorBody(ErrorCode code, const std::string& message) {
  return {{"error", {{"code", ErrorCodeName(code)}, {"message", message}}}};
}

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownPaperId:
    case ErrorCode::kUnknownScholarId:
    case ErrorCode::kUnknownVenueId:
    case ErrorCode::kUnknownHandle:
      return 404;
    case ErrorCode::kInternal:
    case ErrorCode::kFileNotReadable:
    case ErrorCode::kPortInUse:
      return 500;
    default:
      return 400;
  }
}

Service::Service(std::shared_ptr<const Corpus> corpus)
    : corpus_(std::move(corpus)) {}

Service::~Service() { Stop(); }

Response Service::Handle(const std::string& method, const std::string& path,
                         const std::string& body) const {
  try {
    json parsed;
    if (!body.empty()) {
      parsed = json::parse(body, nullptr, false);
      if (parsed.is_discarded()) {
        return {400, ErrorBody(ErrorCode::kParseError,
                               "request body is not valid JSON")};
      }
    }
    return Route(method, path, parsed);
  } catch (const NotFound&) {
    return {404, ErrorBody(ErrorCode::kInvalidArgument,
                           "no route for " + method + " " + path)};
  } catch (const Error& e) {
    return {HttpStatusFor(e.code()), ErrorBody(e.code(), e.what())};
  } catch (const json::exception& e) {
    return {400, ErrorBody(ErrorCode::kParseError, e.what())};
  } catch (const std::exception& e) {
    return {500, ErrorBody(ErrorCode::kInternal, e.what())};
  }
}

json Service::SetToJson(const RegisteredSet& entry) const {
  const PaperSet& set = *entry.set;
  return {{"handle", entry.handle},
          {"label", set.label},
          {"size", set.size()},
          {"role", SetRoleName(entry.role)},
          {"spec", set.spec ? SpecToJson(*set.spec)["labels"] : json()},
          {"timeline", TimelineToJson(ComputeTimeline(*corpus_, set))},
          {"metrics", ComputeSetMetrics(*corpus_, set).ToJson()}};
}

Response Service::Route(const std::string& method, const std::string& path,
                        const json& body) const {
  const std::vector<std::string> seg = Segments(path);
  const Corpus& corpus = *corpus_;
  const size_t n = seg.size();

  if (n == 1 && seg[0] == "health" && method == "GET") {
    return {200, {{"status", "ok"}, {"papers", corpus.paper_count()}}};
  }
  if (n >= 1 && seg[0] == "scholars" && method == "GET") {
    if (n == 1) return {200, {{"scholars", ScholarsToJson(corpus)}}};
    if (n == 3 && seg[2] == "coauthors") {
      const size_t s = corpus.ScholarIndexOf(seg[1]);
      return {200,
              {{"focus", seg[1]},
               {"name", corpus.scholar(s).name},
               {"total_papers", corpus.scholar(s).papers.size()},
               {"coauthors", CoauthorsToJson(CoauthorStats(corpus, seg[1]))}}};
    }
  }
  if (n == 2 && seg[0] == "papers" && method == "GET") {
    return {200, PaperToJson(corpus, corpus.PaperIndexOf(seg[1]))};
  }
  if (n >= 1 && seg[0] == "sets") {
    if (n == 1 && method == "GET") {
      json sets = json::array();
      for (const RegisteredSet& entry : registry_.List()) {
        sets.push_back({{"handle", entry.handle},
                        {"label", entry.set->label},
                        {"size", entry.set->size()},
                        {"role", SetRoleName(entry.role)}});
      }
      return {200, {{"sets", sets}}};
    }
    if (n == 1 && method == "POST") {
      PaperSet set = Combine(corpus, SpecFromJson(body));
      const std::string handle = registry_.Add(std::move(set));
      return {201, SetToJson(registry_.Get(handle))};
    }
    if (n == 2 && method == "GET") return {200, SetToJson(registry_.Get(seg[1]))};
    if (n == 2 && method == "DELETE") {
      registry_.Remove(seg[1]);
      return {200, {{"deleted", seg[1]}}};
    }
    if (n == 3 && seg[2] == "filter-years" && method == "POST") {
      RequireObject(body);
      const RegisteredSet source = registry_.Get(seg[1]);
      PaperSet filtered = FilterYears(corpus, *source.set,
                                      IntField(body, "from", std::nullopt),
                                      IntField(body, "to", std::nullopt));
      const std::string handle = registry_.Add(std::move(filtered));
      return {201, SetToJson(registry_.Get(handle))};
    }
    if (n == 3 && seg[2] == "role" && method == "PUT") {
      RequireObject(body);
      auto it = body.find("role");
      std::optional<SetRole> role =
          it != body.end() && it->is_string()
              ? ParseSetRole(it->get<std::string>())
              : std::nullopt;
      if (!role) BadBody("'role' must be upper, lower or unassigned");
      registry_.AssignRole(seg[1], *role);
      return {200, SetToJson(registry_.Get(seg[1]))};
    }
    if (n == 3 && seg[2] == "hierarchy" && method == "POST") {
      const RegisteredSet entry = registry_.Get(seg[1]);
      const HierarchyQuery query = QueryFromJson(body);
      const Hierarchy h = BuildHierarchy(corpus, *entry.set, query.request);
      return {200, HierarchyToJson(corpus, h, query.scale, query.max_element_ids)};
    }
  }
  if (n == 1 && seg[0] == "compare" && method == "POST") {
    RequireObject(body);
    auto handle_of = [&](const char* field, SetRole role) {
      auto it = body.find(field);
      if (it != body.end() && !it->is_null()) {
        if (!it->is_string()) BadBody(std::string("'") + field + "' must be a handle");
        return registry_.Get(it->get<std::string>());
      }
      for (const RegisteredSet& entry : registry_.List()) {
        if (entry.role == role) return entry;
      }
      throw Error(ErrorCode::kUnknownHandle,
                  std::string("no '") + field + "' handle given and no set holds that role");
    };
    const RegisteredSet upper = handle_of("upper", SetRole::kUpper);
    const RegisteredSet lower = handle_of("lower", SetRole::kLower);
    const bool lock = BoolField(body, "lock", true);
    const bool align = BoolField(body, "align", false);
    const int offset = IntField(body, "offset", 0);
    if (offset != 0 && !align) {
      throw Error(ErrorCode::kInvalidArgument, "a year offset needs align=true");
    }
    auto h = body.find("hierarchy");
    if (h == body.end()) BadBody("missing 'hierarchy'");
    const HierarchyQuery upper_query = QueryFromJson(*h);
    HierarchyQuery lower_query = upper_query;
    if (!lock) {
      if (auto l = body.find("lower_hierarchy"); l != body.end() && !l->is_null()) {
        lower_query = QueryFromJson(*l);
      }
    }
    const Hierarchy hu = BuildHierarchy(corpus, *upper.set, upper_query.request);
    const Hierarchy hl = BuildHierarchy(corpus, *lower.set, lower_query.request);
    json aligned;
    if (align) aligned = AlignedToJson(Align(hu, hl, offset), upper_query.scale);
    return {200,
            {{"upper", HierarchyToJson(corpus, hu, upper_query.scale,
                                       upper_query.max_element_ids)},
             {"lower", HierarchyToJson(corpus, hl, lower_query.scale,
                                       lower_query.max_element_ids)},
             {"lock", lock},
             {"align", align},
             {"offset", offset},
             {"description", DescriptionToJson(DescribeComparison(
                                 upper.set->label, lower.set->label, align))},
             {"aligned", aligned}}};
  }
  throw NotFound{};
}

void Service::Bind(const std::string& host, int port) {
  if (server_) throw Error(ErrorCode::kInvalidArgument, "service already bound");
  server_ = std::make_unique<httplib::Server>();
  // SO_REUSEPORT (the library default) would let a second server share the
  // port silently; keep only SO_REUSEADDR.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    Response r = Handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  const char* any = R"(.*)";
  server_->Get(any, handler);
  server_->Post(any, handler);
  server_->Put(any, handler);
  server_->Delete(any, handler);

  int bound = -1;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
  } else if (server_->bind_to_port(host, port)) {
    bound = port;
  }
  if (bound <= 0) {
    server_.reset();
    throw Error(ErrorCode::kPortInUse,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  port_ = bound;
}

int Service::Start(const std::string& host, int port) {
  Bind(host, port);
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port_;
}

void Service::Run(const std::string& host, int port) {
  Bind(host, port);
  server_->listen_after_bind();
  server_.reset();
  port_ = 0;
}

// With Run() the serving thread owns teardown; Stop() only wakes it.
void Service::Stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) {
    thread_.join();
    server_.reset();
    port_ = 0;
  }
}

}  // namespace sd2

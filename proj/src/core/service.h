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

// JSON service over an immutable corpus. Requests are routed by Handle(), so
// the same logic answers in-process calls and HTTP traffic.
//
//   GET    /health
//   GET    /scholars
//   GET    /scholars/{id}/coauthors
//   GET    /sets
//   POST   /sets                     {"labels": {...}}
//   GET    /sets/{h}
//   DELETE /sets/{h}
//   POST   /sets/{h}/filter-years    {"from", "to"}
//   PUT    /sets/{h}/role            {"role": "upper"|"lower"|"unassigned"}
//   POST   /sets/{h}/hierarchy       hierarchy query
//   POST   /compare                  {"upper", "lower", "lock", "align",
//                                     "offset", "hierarchy", "lower_hierarchy"}
//   GET    /papers/{id}

#ifndef SD2_CORE_SERVICE_H_
#define SD2_CORE_SERVICE_H_

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "core/corpus.h"
#include "core/error.h"
#include "core/paper_set.h"
#include "json.hpp"

namespace httplib {
class Server;
}

namespace sd2 {

inline constexpr int kDefaultPort = 8642;

enum class SetRole { kUnassigned, kUpper, kLower };

std::string_view SetRoleName(SetRole role);
std::optional<SetRole> ParseSetRole(std::string_view name);

struct RegisteredSet {
  std::string handle;
  std::shared_ptr<const PaperSet> set;
  SetRole role = SetRole::kUnassigned;
};

// Handles are "s1", "s2", ... in creation order. At most one set holds each
// of the upper and lower roles; assigning a taken role unassigns the
// previous holder.
class SessionSetRegistry {
 public:
  std::string Add(PaperSet set);
  // Throws Error(kUnknownHandle).
  RegisteredSet Get(const std::string& handle) const;
  void Remove(const std::string& handle);
  void AssignRole(const std::string& handle, SetRole role);
  std::vector<RegisteredSet> List() const;

 private:
  mutable std::mutex mu_;
  uint64_t next_ = 1;
  std::map<uint64_t, RegisteredSet> sets_;

  uint64_t Key(const std::string& handle) const;
};

struct Response {
  int status = 200;
  nlohmann::json body;
};

class Service {
 public:
  explicit Service(std::shared_ptr<const Corpus> corpus);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Dispatches one request. Never throws: errors become 4xx/5xx responses
  // with {"error": {"code", "message"}}.
  Response Handle(const std::string& method, const std::string& path,
                  const std::string& body) const;

  // Binds host:port (port 0 picks a free port) and serves on a background
  // thread. Throws Error(kPortInUse) when the port cannot be bound.
  int Start(const std::string& host, int port);
  // Binds and serves on the calling thread until Stop().
  void Run(const std::string& host, int port);
  void Stop();
  int port() const { return port_; }

  const Corpus& corpus() const { return *corpus_; }
  SessionSetRegistry& registry() const { return registry_; }

 private:
  void Bind(const std::string& host, int port);
  Response Route(const std::string& method, const std::string& path,
                 const nlohmann::json& body) const;
  nlohmann::json SetToJson(const RegisteredSet& entry) const;

  std::shared_ptr<const Corpus> corpus_;
  mutable SessionSetRegistry registry_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  std::atomic<int> port_{0};
};

// {"error": {"code": "<ErrorCodeName>", "message": "..."}}
nlohmann::json ErrorBody(ErrorCode code, const std::string& message);
int HttpStatusFor(ErrorCode code);

}  // namespace sd2

#endif  // SD2_CORE_SERVICE_H_

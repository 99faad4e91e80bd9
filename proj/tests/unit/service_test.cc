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

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json_schema.h"
#include "test_support.h"

namespace sd2 {
namespace {

using nlohmann::json;

class ServiceTest : public ::testing::Test {
 protected:
  ServiceTest()
      : corpus_(std::make_shared<const Corpus>(Corpus::Load(testing::SmallFixture()))),
        service_(corpus_) {}

  // Sends a request and checks the status and the response schema.
  json Call(const std::string& method, const std::string& path, const json& body,
            int want_status, const std::string& schema) {
    const Response r =
        service_.Handle(method, path, body.is_null() ? "" : body.dump());
    EXPECT_EQ(r.status, want_status) << method << " " << path << ": " << r.body;
    EXPECT_EQ(testing::ValidateSchema(testing::LoadSchema(schema), r.body),
              std::vector<std::string>{})
        << method << " " << path;
    return r.body;
  }

  std::string NewSet(const json& labels) {
    return Call("POST", "/sets", {{"labels", labels}}, 201, "set")["handle"];
  }

  std::shared_ptr<const Corpus> corpus_;
  Service service_;
};

TEST_F(ServiceTest, Health) {
  const json body = Call("GET", "/health", nullptr, 200, "health");
  EXPECT_EQ(body, json::parse(R"({"status":"ok","papers":12})"));
}

TEST_F(ServiceTest, ScholarsAndCoauthors) {
  const json s = Call("GET", "/scholars", nullptr, 200, "scholars");
  EXPECT_EQ(s["scholars"].size(), 4u);
  const json c = Call("GET", "/scholars/bengio/coauthors", nullptr, 200, "coauthors");
  EXPECT_EQ(c["focus"], "bengio");
  EXPECT_EQ(c["total_papers"], 5);
  // Courville and Goodfellow share 2 papers each with Bengio, Hinton 1.
  ASSERT_EQ(c["coauthors"].size(), 3u);
  EXPECT_EQ(c["coauthors"][0]["coauthor"], "courville");
  EXPECT_EQ(c["coauthors"][1]["coauthor"], "goodfellow");
  EXPECT_EQ(c["coauthors"][2]["co_papers"], 1);
  const json e = Call("GET", "/scholars/lecun/coauthors", nullptr, 404, "error");
  EXPECT_EQ(e["error"]["code"], "UnknownScholarId");
}

TEST_F(ServiceTest, Papers) {
  const json p = Call("GET", "/papers/p05", nullptr, 200, "paper");
  EXPECT_EQ(p["venue"], "fixture-tvcg");
  EXPECT_EQ(p["raw_venue"], "IEEE TVGC");
  Call("GET", "/papers/p99", nullptr, 404, "error");
}

TEST_F(ServiceTest, SetLifecycle) {
  const json created = Call("POST", "/sets",
                            {{"labels", {{"bengio", "and"}, {"courville", "and"}}}},
                            201, "set");
  EXPECT_EQ(created["label"], "Bengio + Courville");
  EXPECT_EQ(created["size"], 2);
  EXPECT_EQ(created["role"], "unassigned");
  EXPECT_EQ(created["metrics"],
            json::parse(R"({"paper_count":2,"total_citations":6,"h_index":1})"));
  EXPECT_EQ(created["timeline"],
            json::parse(R"([{"year":2015,"count":1},{"year":2019,"count":1}])"));
  const std::string h = created["handle"];

  const json filtered =
      Call("POST", "/sets/" + h + "/filter-years", {{"from", 2016}, {"to", 2020}}, 201,
           "set");
  EXPECT_EQ(filtered["label"], "Bengio + Courville [2016–2020]");
  EXPECT_EQ(filtered["size"], 1);
  EXPECT_EQ(filtered["spec"], json());

  const json list = Call("GET", "/sets", nullptr, 200, "sets_list");
  EXPECT_EQ(list["sets"].size(), 2u);
  Call("GET", "/sets/" + h, nullptr, 200, "set");
  EXPECT_EQ(Call("DELETE", "/sets/" + h, nullptr, 200, "deleted")["deleted"], h);
  Call("GET", "/sets/" + h, nullptr, 404, "error");
  Call("DELETE", "/sets/" + h, nullptr, 404, "error");
}

TEST_F(ServiceTest, Roles) {
  const std::string a = NewSet({{"bengio", "and"}});
  const std::string b = NewSet({{"hinton", "and"}});
  EXPECT_EQ(Call("PUT", "/sets/" + a + "/role", {{"role", "upper"}}, 200, "set")["role"],
            "upper");
  Call("PUT", "/sets/" + b + "/role", {{"role", "upper"}}, 200, "set");
  // The upper role moved from a to b.
  EXPECT_EQ(Call("GET", "/sets/" + a, nullptr, 200, "set")["role"], "unassigned");
  Call("PUT", "/sets/" + a + "/role", {{"role", "middle"}}, 400, "error");
}

TEST_F(ServiceTest, HierarchyEndpoint) {
  const std::string h = NewSet({{"goodfellow", "or"}, {"courville", "or"}});
  const json doc = Call("POST", "/sets/" + h + "/hierarchy",
                        {{"chain", {"P.CcfRank", "P.Year"}}, {"scale", "sqrt"}}, 200,
                        "hierarchy");
  EXPECT_EQ(doc["label"], "Courville | Goodfellow");
  EXPECT_EQ(doc["root"]["measure"], 7);
  const json err = Call("POST", "/sets/" + h + "/hierarchy",
                        {{"chain", {"P.Year", "P.Venue", "P.CcfRank", "P.CitationBucket",
                                    "P.IndividualPaper"}}},
                        400, "error");
  EXPECT_EQ(err["error"]["code"], "ChainTooLong");
  EXPECT_EQ(Call("POST", "/sets/" + h + "/hierarchy", {{"chain", {"C.Year"}}}, 400,
                 "error")["error"]["code"],
            "InvalidAttributeForMode");
}

TEST_F(ServiceTest, Compare) {
  const std::string u = NewSet({{"bengio", "and"}});
  const std::string l = NewSet({{"courville", "and"}});
  const json q = {{"chain", {"P.Year"}}};
  json body = {{"upper", u}, {"lower", l}, {"hierarchy", q}};
  json r = Call("POST", "/compare", body, 200, "compare");
  EXPECT_EQ(r["aligned"], json());
  EXPECT_EQ(r["description"]["combined"], json());
  EXPECT_EQ(r["description"]["segments"].size(), 2u);

  body["align"] = true;
  r = Call("POST", "/compare", body, 200, "compare");
  EXPECT_EQ(r["description"]["combined"], "Bengio VS Courville");
  // Bengio years 2015 2016 2018 2019 2020; Courville 2015 2016 2019 2021 Unknown.
  std::vector<std::string> keys;
  for (const json& s : r["aligned"]["root"]["children"]) keys.push_back(s["key"]);
  EXPECT_EQ(keys, (std::vector<std::string>{"2015", "2016", "2018", "2019", "2020",
                                            "2021", "Unknown"}));

  body["offset"] = 1;
  body["align"] = false;
  EXPECT_EQ(Call("POST", "/compare", body, 400, "error")["error"]["code"],
            "InvalidArgument");
  body["align"] = true;
  Call("POST", "/compare", body, 200, "compare");

  // Roles stand in for missing handles.
  Call("PUT", "/sets/" + u + "/role", {{"role", "upper"}}, 200, "set");
  Call("PUT", "/sets/" + l + "/role", {{"role", "lower"}}, 200, "set");
  r = Call("POST", "/compare", {{"hierarchy", q}}, 200, "compare");
  EXPECT_EQ(r["upper"]["label"], "Bengio");
  EXPECT_EQ(r["lower"]["label"], "Courville");

  // Unlocked with a different lower chain cannot be aligned.
  json unlocked = {{"lock", false}, {"align", true}, {"hierarchy", q},
                   {"lower_hierarchy", {{"chain", {"P.Venue"}}}}};
  EXPECT_EQ(Call("POST", "/compare", unlocked, 400, "error")["error"]["code"],
            "ChainMismatch");
  unlocked["align"] = false;
  r = Call("POST", "/compare", unlocked, 200, "compare");
  EXPECT_EQ(r["lower"]["chain"], json::array({"P.Venue"}));
}

TEST_F(ServiceTest, BadRequests) {
  Response r = service_.Handle("POST", "/sets", "{not json");
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["error"]["code"], "ParseError");
  EXPECT_EQ(Call("POST", "/sets", {{"labels", {{"bengio", "not"}}}}, 400,
                 "error")["error"]["code"],
            "NoPositiveSelector");
  EXPECT_EQ(Call("POST", "/sets", {{"labels", {{"nobody", "and"}}}}, 404,
                 "error")["error"]["code"],
            "UnknownScholarId");
  Call("GET", "/nowhere", nullptr, 404, "error");
  Call("PATCH", "/health", nullptr, 404, "error");
  Call("POST", "/compare", {{"upper", "s99"}, {"lower", "s98"}}, 404, "error");
}

TEST_F(ServiceTest, ReplayIsDeterministic) {
  const std::vector<std::tuple<std::string, std::string, json>> log = {
      {"POST", "/sets", {{"labels", {{"bengio", "or"}, {"hinton", "or"}}}}},
      {"POST", "/sets", {{"labels", {{"courville", "and"}, {"goodfellow", "not"}}}}},
      {"POST", "/sets/s1/hierarchy",
       {{"chain", {"P.Venue", "P.Year"}}, {"measure", "citations"}}},
      {"POST", "/compare",
       {{"upper", "s1"}, {"lower", "s2"}, {"align", true},
        {"hierarchy", {{"chain", {"P.Year", "P.CcfRank"}}}}}},
  };
  std::vector<std::string> first;
  for (int round = 0; round < 2; ++round) {
    Service fresh(corpus_);
    for (size_t i = 0; i < log.size(); ++i) {
      const auto& [method, path, body] = log[i];
      const std::string out = fresh.Handle(method, path, body.dump()).body.dump();
      if (round == 0) {
        first.push_back(out);
      } else {
        EXPECT_EQ(out, first[i]) << path;
      }
    }
  }
}

TEST_F(ServiceTest, ConcurrentCreatesGetUniqueHandles) {
  std::vector<std::thread> threads;
  std::vector<std::vector<std::string>> handles(4);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 25; ++i) {
        const Response r = service_.Handle(
            "POST", "/sets", R"({"labels":{"bengio":"or","hinton":"or"}})");
        handles[t].push_back(r.body["handle"]);
        service_.Handle("POST", "/sets/" + handles[t].back() + "/hierarchy",
                        R"({"chain":["P.Year"]})");
      }
    });
  }
  for (auto& t : threads) t.join();
  std::set<std::string> all;
  for (const auto& list : handles) all.insert(list.begin(), list.end());
  EXPECT_EQ(all.size(), 100u);
}

TEST(RegistryTest, RolesAreExclusive) {
  SessionSetRegistry reg;
  const std::string a = reg.Add(PaperSet{{}, "a", {}});
  const std::string b = reg.Add(PaperSet{{}, "b", {}});
  EXPECT_NE(a, b);
  reg.AssignRole(a, SetRole::kLower);
  reg.AssignRole(b, SetRole::kLower);
  EXPECT_EQ(reg.Get(a).role, SetRole::kUnassigned);
  EXPECT_EQ(reg.Get(b).role, SetRole::kLower);
  reg.Remove(a);
  EXPECT_EQ(reg.List().size(), 1u);
  EXPECT_THROW(reg.Get(a), Error);
}

TEST_F(ServiceTest, ServesOverHttp) {
  const int port = service_.Start("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  httplib::Client client("127.0.0.1", port);
  auto res = client.Get("/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/json");
  EXPECT_EQ(json::parse(res->body)["papers"], 12);
  res = client.Post("/sets", R"({"labels":{"hinton":"and"}})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 201);
  res = client.Post("/sets", "nope", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);

  // A second service cannot take the same port.
  Service other(corpus_);
  try {
    other.Start("127.0.0.1", port);
    ADD_FAILURE() << "expected PortInUse";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPortInUse);
  }
  service_.Stop();
  EXPECT_FALSE(client.Get("/health"));
}

}  // namespace
}  // namespace sd2

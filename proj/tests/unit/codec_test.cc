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

#include "core/codec.h"

#include <gtest/gtest.h>

#include <string>

#include "expect_error.h"
#include "json_schema.h"
#include "test_support.h"

namespace sd2 {
namespace {

using nlohmann::json;

const AttributeKey kPYear{AttributeSide::kPaper, AttributeField::kYear};
const AttributeKey kPVenue{AttributeSide::kPaper, AttributeField::kVenue};

class CodecTest : public ::testing::Test {
 protected:
  CodecTest() : corpus_(Corpus::Load(testing::SmallFixture())) {}
  Corpus corpus_;
};

TEST(ParseChainTest, AcceptsAndRejects) {
  EXPECT_EQ(ParseChain("P.Year, p.venue"), (std::vector<AttributeKey>{kPYear, kPVenue}));
  EXPECT_SD2_ERROR(ParseChain("P.Year,P.Year"), ErrorCode::kParseError);
  EXPECT_SD2_ERROR(ParseChain("P.Year,,P.Venue"), ErrorCode::kParseError);
  EXPECT_SD2_ERROR(ParseChain("P.Shoe"), ErrorCode::kParseError);
}

TEST(QueryJsonTest, DefaultsAndFields) {
  const HierarchyQuery q = QueryFromJson(json::parse(R"({"chain":["P.Year"]})"));
  EXPECT_EQ(q.request.mode, Mode::kPapers);
  EXPECT_EQ(q.request.measure, Measure::kPaperCount);
  EXPECT_EQ(q.request.thresholds.low_below, 10u);
  EXPECT_EQ(q.request.thresholds.high_at_least, 50u);
  EXPECT_EQ(q.scale, ScaleKind::kLinear);
  EXPECT_EQ(q.max_element_ids, kDefaultMaxElementIds);

  const HierarchyQuery full = QueryFromJson(json::parse(R"({
    "mode": "citations", "chain": "C.Year, P.CcfRank", "measure": "h_index",
    "thresholds": {"low_below": 2, "high_at_least": 5}, "scale": "sqrt",
    "max_element_ids": 3,
    "groups": [
      {"attribute": "C.Year", "groups": [{"range": [2015, 2017]},
                                         {"label": "late", "range": [2018, 2020]}],
       "ignored": ["late"]},
      {"attribute": "P.CcfRank", "groups": [{"label": "top", "values": ["A", "B"]}]}
    ]})"));
  EXPECT_EQ(full.request.mode, Mode::kCitations);
  ASSERT_EQ(full.request.groups.size(), 2u);
  EXPECT_EQ(full.request.groups[0].groups[0].label, "2015–2017");
  EXPECT_EQ(full.request.groups[0].groups[0].values.size(), 3u);
  EXPECT_EQ(full.request.groups[0].ignored, std::vector<std::string>{"late"});
  EXPECT_EQ(full.request.groups[1].groups[0].values[1], AttributeValue(CcfRank::kB));
  EXPECT_EQ(full.scale, ScaleKind::kSqrt);

  const HierarchyQuery back = QueryFromJson(QueryToJson(full));
  EXPECT_EQ(QueryToJson(back), QueryToJson(full));
}

TEST(QueryJsonTest, Malformed) {
  for (const char* bad : {R"([])", R"({})", R"({"chain": 3})",
                          R"({"chain": ["P.Nope"]})",
                          R"({"chain": ["P.Year"], "mode": "links"})",
                          R"({"chain": ["P.Year"], "measure": "fame"})",
                          R"({"chain": ["P.Year"], "scale": "cubic"})",
                          R"({"chain": ["P.Year"], "thresholds": {"low_below": -1}})",
                          R"({"chain": ["P.Year"], "groups": [{"attribute": "P.Year",
                               "groups": [{"label": "x", "values": ["2019"]}]}]})",
                          R"({"chain": ["P.Venue"], "groups": [{"attribute": "P.Venue",
                               "groups": [{"range": [1, 2]}]}]})"}) {
    EXPECT_SD2_ERROR(QueryFromJson(json::parse(bad)), ErrorCode::kParseError);
  }
}

TEST(AttributeValueJsonTest, RoundTrip) {
  EXPECT_EQ(AttributeValueToJson(2019), json(2019));
  EXPECT_EQ(AttributeValueToJson(std::monostate{}), json());
  EXPECT_EQ(AttributeValueToJson(CitationBucket::kHigh), json("High"));
  const AttributeKey bucket{AttributeSide::kCitation, AttributeField::kCitationBucket};
  EXPECT_EQ(AttributeValueFromJson(bucket, "Medium"),
            AttributeValue(CitationBucket::kMedium));
  EXPECT_EQ(AttributeValueFromJson(kPVenue, json()), AttributeValue());
  EXPECT_SD2_ERROR(AttributeValueFromJson(kPYear, "2019"), ErrorCode::kParseError);
}

TEST_F(CodecTest, HierarchyJsonFollowsSchema) {
  const PaperSet all{corpus_.universe(), "everything", {}};
  const Hierarchy h = BuildHierarchy(corpus_, all, {.chain = {kPYear, kPVenue}});
  const json doc = HierarchyToJson(corpus_, h, ScaleKind::kLog, 1);
  EXPECT_EQ(testing::ValidateSchema(testing::LoadSchema("hierarchy"), doc),
            std::vector<std::string>{});
  EXPECT_EQ(doc["label"], "everything");
  EXPECT_EQ(doc["scale"], "log");
  EXPECT_EQ(doc["element_count"], 12);
  EXPECT_EQ(doc["root"]["measure"], 12);
  const json& first = doc["root"]["children"][0];
  EXPECT_EQ(first["attr"], "P.Year");
  EXPECT_EQ(first["value"], 2015);
  const json& leaf = first["children"][0];
  EXPECT_TRUE(leaf["leaf"].get<bool>());
  EXPECT_DOUBLE_EQ(leaf["height_log"].get<double>(), std::log10(2.0));
  EXPECT_EQ(leaf["height"], leaf["height_log"]);
  EXPECT_EQ(leaf["element_ids"], json::array({"p01"}));
  // 2016 holds p02 and p03; the id list is capped at one.
  const json years = HierarchyToJson(
      corpus_, BuildHierarchy(corpus_, all, {.chain = {kPYear}}), ScaleKind::kLinear, 1);
  const json& y2016 = years["root"]["children"][1];
  EXPECT_EQ(y2016["element_count"], 2);
  EXPECT_EQ(y2016["element_ids"], json::array({"p02"}));
}

TEST_F(CodecTest, YearGroupsSerializeRange) {
  const PaperSet all{corpus_.universe(), "all", {}};
  HierarchyRequest req{.chain = {kPYear}};
  req.groups = {{kPYear, {YearRangeGroup(2015, 2016)}, {}}};
  const json doc = HierarchyToJson(corpus_, BuildHierarchy(corpus_, all, req),
                                   ScaleKind::kLinear);
  const json& g = doc["root"]["children"][0];
  EXPECT_EQ(g["group"], "2015–2016");
  EXPECT_EQ(g["year_range"], json::array({2015, 2016}));
  EXPECT_EQ(g["value"], json());
  EXPECT_TRUE(testing::ValidateSchema(testing::LoadSchema("hierarchy"), doc).empty());
}

TEST_F(CodecTest, CsvHasOneRowPerLeaf) {
  PaperSet s = corpus_.PapersOf("bengio");
  const Hierarchy h = BuildHierarchy(corpus_, s, {.chain = {kPYear}});
  EXPECT_EQ(HierarchyToCsv(h, ScaleKind::kSqrt),
            "P.Year,papers,height_sqrt\n"
            "2015,1,1.0\n2016,1,1.0\n2018,1,1.0\n2019,1,1.0\n2020,1,1.0\n");
  const Hierarchy v = BuildHierarchy(corpus_, s, {.chain = {kPVenue}});
  const std::string csv = HierarchyToCsv(v, ScaleKind::kLinear);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "P.Venue,papers,height_linear");
}

TEST_F(CodecTest, PaperAndScholars) {
  const json p = PaperToJson(corpus_, corpus_.PaperIndexOf("p01"));
  EXPECT_TRUE(testing::ValidateSchema(testing::LoadSchema("paper"), p).empty());
  EXPECT_EQ(p["citation_count"], 5);
  EXPECT_EQ(p["h_index"], 2);
  EXPECT_EQ(p["rank"], "A");
  EXPECT_EQ(p["category"], "computer graphics");
  EXPECT_EQ(p["citing"], json::array({"p02", "p03", "p05", "p08", "p09"}));
  const json none = PaperToJson(corpus_, corpus_.PaperIndexOf("p08"));
  EXPECT_EQ(none["venue"], json());
  EXPECT_EQ(none["category"], json());
  EXPECT_EQ(none["rank"], "Unranked");

  const json scholars = {{"scholars", ScholarsToJson(corpus_)}};
  EXPECT_TRUE(testing::ValidateSchema(testing::LoadSchema("scholars"), scholars).empty());
  EXPECT_EQ(scholars["scholars"][2]["unresolved"], 1);
}

TEST(SchemaValidatorTest, CatchesViolations) {
  const json schema = json::parse(R"({
    "type": "object", "required": ["a"], "additionalProperties": false,
    "properties": {"a": {"type": "integer", "minimum": 0},
                   "b": {"type": ["string", "null"], "enum": ["x", null]},
                   "c": {"type": "array", "items": {"$ref": "#/definitions/n"}}},
    "definitions": {"n": {"type": "number"}}})");
  EXPECT_TRUE(testing::ValidateSchema(schema, json::parse(R"({"a":1,"b":null,"c":[1,2.5]})"))
                  .empty());
  EXPECT_EQ(testing::ValidateSchema(schema, json::parse(R"({"b":"y","c":["s"],"d":1})")).size(),
            4u);
  EXPECT_EQ(testing::ValidateSchema(schema, json::parse(R"({"a":-1})")).size(), 1u);
}

}  // namespace
}  // namespace sd2

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

#include <set>
#include <sstream>

#include "core/error.h"

namespace sd2 {

namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> SplitNames(std::string_view text) {
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(Trim(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

AttributeKey KeyFromJson(const json& j) {
  if (!j.is_string()) Fail("chain entries must be attribute names");
  auto key = AttributeKey::Parse(j.get<std::string>());
  if (!key) Fail("unknown attribute '" + j.get<std::string>() + "'");
  return *key;
}

uint64_t UnsignedField(const json& obj, const char* name, uint64_t fallback) {
  auto it = obj.find(name);
  if (it == obj.end() || it->is_null()) return fallback;
  if (!it->is_number_integer() || it->get<int64_t>() < 0) {
    Fail(std::string("'") + name + "' must be a non-negative integer");
  }
  return it->get<uint64_t>();
}

std::string StringField(const json& obj, const char* name,
                        const std::string& fallback) {
  auto it = obj.find(name);
  if (it == obj.end() || it->is_null()) return fallback;
  if (!it->is_string()) Fail(std::string("'") + name + "' must be a string");
  return it->get<std::string>();
}

ValueGroup GroupFromJson(AttributeKey key, const json& j) {
  if (!j.is_object()) Fail("each group must be an object");
  ValueGroup group;
  group.label = StringField(j, "label", "");
  if (auto range = j.find("range"); range != j.end()) {
    if (!key.is_year()) Fail("'range' groups need a year attribute");
    if (!range->is_array() || range->size() != 2 ||
        !(*range)[0].is_number_integer() || !(*range)[1].is_number_integer()) {
      Fail("'range' must be [from, to]");
    }
    ValueGroup brushed =
        YearRangeGroup((*range)[0].get<int>(), (*range)[1].get<int>());
    if (group.label.empty()) group.label = brushed.label;
    group.values = std::move(brushed.values);
    return group;
  }
  auto values = j.find("values");
  if (values == j.end() || !values->is_array()) {
    Fail("group '" + group.label + "' needs a 'values' array or a 'range'");
  }
  for (const json& v : *values) {
    group.values.push_back(AttributeValueFromJson(key, v));
  }
  return group;
}

GroupSpec GroupSpecFromJson(const json& j) {
  if (!j.is_object()) Fail("each grouping must be an object");
  auto attr = j.find("attribute");
  if (attr == j.end()) Fail("grouping without 'attribute'");
  GroupSpec spec;
  spec.attribute = KeyFromJson(*attr);
  auto groups = j.find("groups");
  if (groups == j.end() || !groups->is_array()) {
    Fail("grouping needs a 'groups' array");
  }
  for (const json& g : *groups) {
    spec.groups.push_back(GroupFromJson(spec.attribute, g));
  }
  if (auto ignored = j.find("ignored"); ignored != j.end()) {
    if (!ignored->is_array()) Fail("'ignored' must be an array of labels");
    for (const json& label : *ignored) {
      if (!label.is_string()) Fail("'ignored' must be an array of labels");
      spec.ignored.push_back(label.get<std::string>());
    }
  }
  return spec;
}

double Height(uint64_t measure, ScaleKind kind) {
  return ScaleHeight(static_cast<double>(measure), kind);
}

void AddHeights(json& out, uint64_t measure, ScaleKind scale) {
  out["height_linear"] = Height(measure, ScaleKind::kLinear);
  out["height_sqrt"] = Height(measure, ScaleKind::kSqrt);
  out["height_log"] = Height(measure, ScaleKind::kLog);
  out["height"] = Height(measure, scale);
}

json NodeHeader(const HierarchyNode& node) {
  json out;
  out["attr"] = node.attribute ? json(node.attribute->Name()) : json();
  out["value"] = AttributeValueToJson(node.value);
  if (node.group) out["group"] = *node.group;
  if (node.year_range) {
    out["year_range"] = {node.year_range->first, node.year_range->second};
  }
  out["label"] = node.label;
  out["width"] = node.width;
  out["measure"] = node.measure;
  out["leaf"] = node.leaf;
  return out;
}

json NodeToJson(const Corpus& corpus, const Hierarchy& h,
                const HierarchyNode& node, ScaleKind scale, size_t max_ids) {
  json out = NodeHeader(node);
  json children = json::array();
  for (const HierarchyNode& child : node.children) {
    children.push_back(NodeToJson(corpus, h, child, scale, max_ids));
  }
  out["children"] = std::move(children);
  if (node.leaf) {
    AddHeights(out, node.measure, scale);
    json ids = json::array();
    for (size_t i = 0; i < node.elements.size() && i < max_ids; ++i) {
      ids.push_back(ElementId(corpus, h.elements[node.elements[i]]));
    }
    out["element_ids"] = std::move(ids);
    out["element_count"] = node.elements.size();
  }
  return out;
}

json SideToJson(const std::optional<HierarchyNode>& node, ScaleKind scale) {
  if (!node) return json();
  json out = NodeHeader(*node);
  if (node->leaf) {
    AddHeights(out, node->measure, scale);
    out["element_count"] = node->elements.size();
  }
  return out;
}

json SlotToJson(const AlignedSlot& slot, ScaleKind scale) {
  json out;
  out["key"] = slot.key;
  out["width"] = slot.width;
  out["upper"] = SideToJson(slot.upper, scale);
  out["lower"] = SideToJson(slot.lower, scale);
  out["upper_measure"] = slot.upper_measure();
  out["lower_measure"] = slot.lower_measure();
  json children = json::array();
  for (const AlignedSlot& child : slot.children) {
    children.push_back(SlotToJson(child, scale));
  }
  out["children"] = std::move(children);
  return out;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void LeafRows(const HierarchyNode& node, std::vector<std::string>& path,
              ScaleKind scale, std::ostringstream& out) {
  if (node.leaf) {
    for (const std::string& label : path) out << CsvField(label) << ',';
    json height = Height(node.measure, scale);
    out << node.measure << ',' << height.dump() << '\n';
    return;
  }
  for (const HierarchyNode& child : node.children) {
    path.push_back(child.label);
    LeafRows(child, path, scale, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<AttributeKey> ParseChain(std::string_view text) {
  std::vector<AttributeKey> chain;
  std::set<AttributeKey> seen;
  for (const std::string& name : SplitNames(text)) {
    auto key = AttributeKey::Parse(name);
    if (!key) Fail("unknown attribute '" + name + "' in chain");
    if (!seen.insert(*key).second) {
      Fail("attribute " + key->Name() + " is repeated in the chain");
    }
    chain.push_back(*key);
  }
  return chain;
}

std::string_view ModeName(Mode mode) {
  return mode == Mode::kPapers ? "papers" : "citations";
}

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "papers" || name == "Papers") return Mode::kPapers;
  if (name == "citations" || name == "Citations") return Mode::kCitations;
  return std::nullopt;
}

HierarchyQuery QueryFromJson(const json& body) {
  if (!body.is_object()) Fail("hierarchy request must be a JSON object");
  HierarchyQuery query;
  HierarchyRequest& request = query.request;

  const std::string mode = StringField(body, "mode", "papers");
  auto parsed_mode = ParseMode(mode);
  if (!parsed_mode) Fail("unknown mode '" + mode + "'");
  request.mode = *parsed_mode;

  auto chain = body.find("chain");
  if (chain == body.end()) Fail("missing 'chain'");
  if (chain->is_string()) {
    // Textual form, as typed on a command line.
    request.chain = ParseChain(chain->get<std::string>());
  } else if (chain->is_array()) {
    for (const json& key : *chain) request.chain.push_back(KeyFromJson(key));
  } else {
    Fail("'chain' must be an array of attribute names");
  }

  if (auto groups = body.find("groups"); groups != body.end() && !groups->is_null()) {
    if (!groups->is_array()) Fail("'groups' must be an array");
    for (const json& g : *groups) request.groups.push_back(GroupSpecFromJson(g));
  }

  const std::string measure = StringField(body, "measure", "papers");
  auto parsed_measure = ParseMeasure(measure);
  if (!parsed_measure) Fail("unknown measure '" + measure + "'");
  request.measure = *parsed_measure;

  if (auto t = body.find("thresholds"); t != body.end() && !t->is_null()) {
    if (!t->is_object()) Fail("'thresholds' must be an object");
    request.thresholds.low_below =
        UnsignedField(*t, "low_below", request.thresholds.low_below);
    request.thresholds.high_at_least =
        UnsignedField(*t, "high_at_least", request.thresholds.high_at_least);
  }

  const std::string scale = StringField(body, "scale", "linear");
  auto parsed_scale = ParseScaleKind(scale);
  if (!parsed_scale) Fail("unknown scale '" + scale + "'");
  query.scale = *parsed_scale;

  query.max_element_ids =
      UnsignedField(body, "max_element_ids", kDefaultMaxElementIds);
  return query;
}

json QueryToJson(const HierarchyQuery& query) {
  const HierarchyRequest& r = query.request;
  json chain = json::array();
  for (const AttributeKey& key : r.chain) chain.push_back(key.Name());
  json groups = json::array();
  for (const GroupSpec& spec : r.groups) {
    json list = json::array();
    for (const ValueGroup& g : spec.groups) {
      json values = json::array();
      for (const AttributeValue& v : g.values) {
        values.push_back(AttributeValueToJson(v));
      }
      list.push_back({{"label", g.label}, {"values", values}});
    }
    groups.push_back({{"attribute", spec.attribute.Name()},
                      {"groups", list},
                      {"ignored", spec.ignored}});
  }
  return {{"mode", ModeName(r.mode)},
          {"chain", chain},
          {"groups", groups},
          {"measure", MeasureName(r.measure)},
          {"thresholds",
           {{"low_below", r.thresholds.low_below},
            {"high_at_least", r.thresholds.high_at_least}}},
          {"scale", ScaleKindName(query.scale)},
          {"max_element_ids", query.max_element_ids}};
}

json AttributeValueToJson(const AttributeValue& value) {
  if (IsUnknown(value)) return json();
  if (const int* year = std::get_if<int>(&value)) return *year;
  if (const std::string* s = std::get_if<std::string>(&value)) return *s;
  if (const CcfRank* rank = std::get_if<CcfRank>(&value)) {
    return CcfRankName(*rank);
  }
  return CitationBucketName(std::get<CitationBucket>(value));
}

AttributeValue AttributeValueFromJson(AttributeKey key, const json& j) {
  const std::string where = " for " + key.Name();
  switch (key.field) {
    case AttributeField::kYear:
      if (!j.is_number_integer()) Fail("expected an integer year" + where);
      return j.get<int>();
    case AttributeField::kVenue:
      if (j.is_null()) return std::monostate{};
      if (!j.is_string()) Fail("expected a venue id or null" + where);
      return j.get<std::string>();
    case AttributeField::kIndividualPaper:
      if (!j.is_string()) Fail("expected a paper id" + where);
      return j.get<std::string>();
    case AttributeField::kCcfRank: {
      auto rank = j.is_string() ? ParseCcfRank(j.get<std::string>()) : std::nullopt;
      if (!rank) Fail("expected A, B, C or Unranked" + where);
      return *rank;
    }
    case AttributeField::kCitationBucket: {
      auto bucket =
          j.is_string() ? ParseCitationBucket(j.get<std::string>()) : std::nullopt;
      if (!bucket) Fail("expected High, Medium or Low" + where);
      return *bucket;
    }
  }
  Fail("unsupported attribute" + where);
}

json HierarchyToJson(const Corpus& corpus, const Hierarchy& h, ScaleKind scale,
                     size_t max_element_ids) {
  json chain = json::array();
  for (const AttributeKey& key : h.request.chain) chain.push_back(key.Name());
  return {{"label", h.label},
          {"mode", ModeName(h.request.mode)},
          {"chain", chain},
          {"measure", MeasureName(h.request.measure)},
          {"scale", ScaleKindName(scale)},
          {"element_count", h.elements.size()},
          {"root", NodeToJson(corpus, h, h.root, scale, max_element_ids)}};
}

std::string HierarchyToCsv(const Hierarchy& h, ScaleKind scale) {
  std::ostringstream out;
  for (const AttributeKey& key : h.request.chain) out << key.Name() << ',';
  out << MeasureName(h.request.measure) << ",height_" << ScaleKindName(scale)
      << '\n';
  std::vector<std::string> path;
  LeafRows(h.root, path, scale, out);
  return out.str();
}

json AlignedToJson(const AlignedComparison& aligned, ScaleKind scale) {
  json chain = json::array();
  for (const AttributeKey& key : aligned.chain) chain.push_back(key.Name());
  return {{"chain", chain},
          {"offset", aligned.offset},
          {"scale", ScaleKindName(scale)},
          {"root", SlotToJson(aligned.root, scale)}};
}

json DescriptionToJson(const ComparisonDescription& d) {
  json segments = json::array();
  for (const DescriptionSegment& s : d.segments) {
    segments.push_back({{"text", s.text}, {"role", s.role}});
  }
  return {{"aligned", d.aligned},
          {"upper", d.upper},
          {"lower", d.lower},
          {"combined", d.combined ? json(*d.combined) : json()},
          {"segments", segments}};
}

json CoauthorsToJson(const std::vector<CoauthorStat>& stats) {
  json out = json::array();
  for (const CoauthorStat& s : stats) {
    out.push_back({{"coauthor", s.coauthor},
                   {"name", s.name},
                   {"total_papers", s.total_papers},
                   {"co_papers", s.co_papers}});
  }
  return out;
}

json PaperToJson(const Corpus& corpus, PaperIndex p) {
  const PaperRecord& paper = corpus.paper(p);
  const Classification c = corpus.ClassifyPaper(p);
  json venue_name;
  if (paper.venue) {
    if (const VenueRecord* v = corpus.venues().Find(*paper.venue)) {
      venue_name = v->canonical_name;
    }
  }
  json citing = json::array();
  for (PaperIndex q : corpus.CitingOf(p)) citing.push_back(corpus.paper(q).id);
  return {{"id", paper.id},
          {"title", paper.title},
          {"year", paper.year ? json(*paper.year) : json()},
          {"venue", paper.venue ? json(*paper.venue) : json()},
          {"venue_name", venue_name},
          {"raw_venue", paper.raw_venue ? json(*paper.raw_venue) : json()},
          {"authors", paper.authors},
          {"category", c.category == CcfCategory::kNone
                           ? json()
                           : json(CcfCategoryName(c.category))},
          {"rank", CcfRankName(c.rank)},
          {"citation_count", corpus.CitationCount(p)},
          {"h_index", PaperHIndex(corpus, p)},
          {"citing", citing}};
}

json ScholarsToJson(const Corpus& corpus) {
  json out = json::array();
  for (const ScholarProfile& s : corpus.scholars()) {
    out.push_back({{"id", s.id},
                   {"name", s.name},
                   {"paper_count", s.papers.size()},
                   {"unresolved", s.unresolved.size()}});
  }
  return out;
}

}  // namespace sd2

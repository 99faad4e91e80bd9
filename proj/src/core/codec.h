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

// JSON (and CSV) encodings shared by the HTTP service, the C API and the CLI.
// Objects are nlohmann::json with sorted keys, so dump() is canonical.

#ifndef SD2_CORE_CODEC_H_
#define SD2_CORE_CODEC_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "core/corpus.h"
#include "core/hist_engine.h"
#include "core/metrics.h"
#include "core/paper_set.h"
#include "core/scholar_sets.h"
#include "json.hpp"

namespace sd2 {

inline constexpr size_t kDefaultMaxElementIds = 100;

// A hierarchy request plus presentation options.
struct HierarchyQuery {
  HierarchyRequest request;
  ScaleKind scale = ScaleKind::kLinear;
  size_t max_element_ids = kDefaultMaxElementIds;
};

// Comma-separated attribute names ("P.Year,P.Venue"). Throws ParseError for
// unknown names and for a repeated attribute.
std::vector<AttributeKey> ParseChain(std::string_view text);

std::string_view ModeName(Mode mode);  // "papers", "citations"
std::optional<Mode> ParseMode(std::string_view name);

// {"mode", "chain", "groups", "measure", "thresholds", "scale",
//  "max_element_ids"}; everything but "chain" is optional. "chain" is an
// array of names or a ParseChain string. Throws ParseError on malformed
// input. Semantic checks are left to ValidateRequest.
HierarchyQuery QueryFromJson(const nlohmann::json& body);
nlohmann::json QueryToJson(const HierarchyQuery& query);

nlohmann::json AttributeValueToJson(const AttributeValue& value);
// Throws ParseError when `j` does not fit the attribute.
AttributeValue AttributeValueFromJson(AttributeKey key, const nlohmann::json& j);

nlohmann::json HierarchyToJson(const Corpus& corpus, const Hierarchy& h,
                               ScaleKind scale,
                               size_t max_element_ids = kDefaultMaxElementIds);

// One row per leaf: the label at each chain level, the measure and the
// scaled height.
std::string HierarchyToCsv(const Hierarchy& h, ScaleKind scale);

nlohmann::json AlignedToJson(const AlignedComparison& aligned, ScaleKind scale);

nlohmann::json DescriptionToJson(const ComparisonDescription& d);

nlohmann::json CoauthorsToJson(const std::vector<CoauthorStat>& stats);

nlohmann::json PaperToJson(const Corpus& corpus, PaperIndex p);

nlohmann::json ScholarsToJson(const Corpus& corpus);

}  // namespace sd2

#endif  // SD2_CORE_CODEC_H_

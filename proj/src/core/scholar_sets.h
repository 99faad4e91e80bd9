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

// Set algebra over scholars' paper sets.
//
// Each scholar carries one operator label. The combined set is
//
//   (union of "or" scholars) ∩ (intersection of "and" scholars)
//       − (union of "not" scholars)
//
// where a missing "or" or "and" group contributes the whole corpus. At least
// one scholar must be labelled "and" or "or".

#ifndef SD2_CORE_SCHOLAR_SETS_H_
#define SD2_CORE_SCHOLAR_SETS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/corpus.h"
#include "core/paper_set.h"
#include "json.hpp"

namespace sd2 {

struct CoauthorStat {
  std::string coauthor;  // ScholarId
  std::string name;
  uint64_t total_papers = 0;
  uint64_t co_papers = 0;
};

struct TimelineEntry {
  std::optional<int> year;  // nullopt = Unknown
  uint64_t count = 0;

  bool operator==(const TimelineEntry&) const = default;
};
// Known years ascending, then Unknown.
using Timeline = std::vector<TimelineEntry>;

// Throws UnknownScholarId or NoPositiveSelector.
void ValidateSpec(const Corpus& corpus, const CombinationSpec& spec);

PaperSet Combine(const Corpus& corpus, const CombinationSpec& spec);

// Renders the label in scholar registration order using display names:
// "A + B + (C | D) - E". Throws like ValidateSpec.
std::string FormatLabel(const Corpus& corpus, const CombinationSpec& spec);
// Same grammar over already-ordered (display name, operator) pairs.
std::string FormatLabel(
    std::span<const std::pair<std::string, OperatorLabel>> ordered);

// Scholars sharing at least one paper with `focus`, by co_papers
// descending, then name ascending.
std::vector<CoauthorStat> CoauthorStats(const Corpus& corpus,
                                        std::string_view focus);

Timeline ComputeTimeline(const Corpus& corpus, const PaperSet& set);

// Members with a known year in [from_year, to_year]. Throws InvalidRange.
PaperSet FilterYears(const Corpus& corpus, const PaperSet& set, int from_year,
                     int to_year);

// "<from>–<to>", the label used for brushed year ranges.
std::string YearRangeLabel(int from_year, int to_year);

// {"labels": {"<scholar_id>": "not"|"ignore"|"and"|"or"}}. Throws
// ParseError on a malformed body.
CombinationSpec SpecFromJson(const nlohmann::json& body);
nlohmann::json SpecToJson(const CombinationSpec& spec);

nlohmann::json TimelineToJson(const Timeline& timeline);

}  // namespace sd2

#endif  // SD2_CORE_SCHOLAR_SETS_H_

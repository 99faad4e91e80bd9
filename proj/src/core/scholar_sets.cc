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

#include "core/scholar_sets.h"

#include <algorithm>
#include <iterator>

#include "core/error.h"

namespace sd2 {

namespace {

using Members = std::vector<PaperIndex>;

constexpr std::string_view kEnDash = "\xE2\x80\x93";

Members Union(const Members& a, const Members& b) {
  Members out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

Members Intersect(const Members& a, const Members& b) {
  Members out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Members Subtract(const Members& a, const Members& b) {
  Members out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

// Spec entries in scholar registration order, with display names.
std::vector<std::pair<std::string, OperatorLabel>> OrderedEntries(
    const Corpus& corpus, const CombinationSpec& spec) {
  std::vector<std::pair<size_t, OperatorLabel>> indexed;
  for (const auto& [id, label] : spec) {
    indexed.emplace_back(corpus.ScholarIndexOf(id), label);
  }
  std::sort(indexed.begin(), indexed.end());
  std::vector<std::pair<std::string, OperatorLabel>> out;
  for (const auto& [s, label] : indexed) {
    out.emplace_back(corpus.scholar(s).name, label);
  }
  return out;
}

}  // namespace

std::string_view OperatorLabelName(OperatorLabel label) {
  switch (label) {
    case OperatorLabel::kNot: return "not";
    case OperatorLabel::kIgnore: return "ignore";
    case OperatorLabel::kAnd: return "and";
    case OperatorLabel::kOr: return "or";
  }
  return "ignore";
}

std::optional<OperatorLabel> ParseOperatorLabel(std::string_view name) {
  if (name == "not") return OperatorLabel::kNot;
  if (name == "ignore") return OperatorLabel::kIgnore;
  if (name == "and") return OperatorLabel::kAnd;
  if (name == "or") return OperatorLabel::kOr;
  return std::nullopt;
}

void ValidateSpec(const Corpus& corpus, const CombinationSpec& spec) {
  bool positive = false;
  for (const auto& [id, label] : spec) {
    corpus.ScholarIndexOf(id);
    positive |= label == OperatorLabel::kAnd || label == OperatorLabel::kOr;
  }
  if (!positive) {
    throw Error(ErrorCode::kNoPositiveSelector,
                "at least one scholar must be labelled 'and' or 'or'");
  }
}

PaperSet Combine(const Corpus& corpus, const CombinationSpec& spec) {
  ValidateSpec(corpus, spec);
  std::optional<Members> any_of;
  std::optional<Members> all_of;
  Members none_of;
  for (const auto& [id, label] : spec) {
    const Members& papers = corpus.scholar(corpus.ScholarIndexOf(id)).papers;
    switch (label) {
      case OperatorLabel::kOr:
        any_of = any_of ? Union(*any_of, papers) : papers;
        break;
      case OperatorLabel::kAnd:
        all_of = all_of ? Intersect(*all_of, papers) : papers;
        break;
      case OperatorLabel::kNot:
        none_of = Union(none_of, papers);
        break;
      case OperatorLabel::kIgnore:
        break;
    }
  }
  Members base;
  if (any_of && all_of) {
    base = Intersect(*any_of, *all_of);
  } else {
    base = any_of ? std::move(*any_of) : std::move(*all_of);
  }
  return PaperSet{Subtract(base, none_of), FormatLabel(corpus, spec), spec};
}

std::string FormatLabel(const Corpus& corpus, const CombinationSpec& spec) {
  ValidateSpec(corpus, spec);
  auto ordered = OrderedEntries(corpus, spec);
  return FormatLabel(ordered);
}

std::string FormatLabel(
    std::span<const std::pair<std::string, OperatorLabel>> ordered) {
  std::vector<std::string_view> ands, ors, nots;
  for (const auto& [name, label] : ordered) {
    switch (label) {
      case OperatorLabel::kAnd: ands.push_back(name); break;
      case OperatorLabel::kOr: ors.push_back(name); break;
      case OperatorLabel::kNot: nots.push_back(name); break;
      case OperatorLabel::kIgnore: break;
    }
  }
  if (ands.empty() && ors.empty()) {
    throw Error(ErrorCode::kNoPositiveSelector,
                "at least one scholar must be labelled 'and' or 'or'");
  }
  auto join = [](const std::vector<std::string_view>& names,
                 std::string_view sep) {
    std::string out;
    for (size_t i = 0; i < names.size(); ++i) {
      if (i > 0) out += sep;
      out += names[i];
    }
    return out;
  };
  std::string label = join(ands, " + ");
  if (!ors.empty()) {
    if (ands.empty()) {
      label = join(ors, " | ");
    } else {
      label += " + (" + join(ors, " | ") + ")";
    }
  }
  for (std::string_view name : nots) {
    label += " - ";
    label += name;
  }
  return label;
}

std::vector<CoauthorStat> CoauthorStats(const Corpus& corpus,
                                        std::string_view focus) {
  const size_t focus_index = corpus.ScholarIndexOf(focus);
  const Members& mine = corpus.scholar(focus_index).papers;
  std::vector<CoauthorStat> stats;
  for (size_t s = 0; s < corpus.scholars().size(); ++s) {
    if (s == focus_index) continue;
    const ScholarProfile& other = corpus.scholar(s);
    const size_t shared = Intersect(mine, other.papers).size();
    if (shared == 0) continue;
    stats.push_back({other.id, other.name, other.papers.size(), shared});
  }
  std::sort(stats.begin(), stats.end(),
            [](const CoauthorStat& a, const CoauthorStat& b) {
              if (a.co_papers != b.co_papers) return a.co_papers > b.co_papers;
              if (a.name != b.name) return a.name < b.name;
              return a.coauthor < b.coauthor;
            });
  return stats;
}

Timeline ComputeTimeline(const Corpus& corpus, const PaperSet& set) {
  std::map<int, uint64_t> by_year;
  uint64_t unknown = 0;
  for (PaperIndex p : set.members) {
    if (auto year = corpus.paper(p).year) {
      ++by_year[*year];
    } else {
      ++unknown;
    }
  }
  Timeline out;
  for (const auto& [year, count] : by_year) out.push_back({year, count});
  if (unknown > 0) out.push_back({std::nullopt, unknown});
  return out;
}

PaperSet FilterYears(const Corpus& corpus, const PaperSet& set, int from_year,
                     int to_year) {
  if (from_year > to_year) {
    throw Error(ErrorCode::kInvalidRange,
                "year range " + std::to_string(from_year) + " > " +
                    std::to_string(to_year));
  }
  PaperSet out;
  for (PaperIndex p : set.members) {
    const auto& year = corpus.paper(p).year;
    if (year && *year >= from_year && *year <= to_year) {
      out.members.push_back(p);
    }
  }
  out.label = set.label + " [" + YearRangeLabel(from_year, to_year) + "]";
  return out;
}

std::string YearRangeLabel(int from_year, int to_year) {
  return std::to_string(from_year) + std::string(kEnDash) +
         std::to_string(to_year);
}

CombinationSpec SpecFromJson(const nlohmann::json& body) {
  if (!body.is_object()) {
    throw Error(ErrorCode::kParseError, "expected a JSON object");
  }
  auto labels = body.find("labels");
  if (labels == body.end() || !labels->is_object()) {
    throw Error(ErrorCode::kParseError, "missing object field 'labels'");
  }
  CombinationSpec spec;
  for (const auto& [id, value] : labels->items()) {
    std::optional<OperatorLabel> label =
        value.is_string() ? ParseOperatorLabel(value.get<std::string>())
                          : std::nullopt;
    if (!label) {
      throw Error(ErrorCode::kParseError,
                  "label for '" + id + "' must be not, ignore, and or or");
    }
    spec.emplace(id, *label);
  }
  return spec;
}

nlohmann::json SpecToJson(const CombinationSpec& spec) {
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [id, label] : spec) labels[id] = OperatorLabelName(label);
  return {{"labels", labels}};
}

nlohmann::json TimelineToJson(const Timeline& timeline) {
  nlohmann::json out = nlohmann::json::array();
  for (const TimelineEntry& e : timeline) {
    out.push_back({{"year", e.year ? nlohmann::json(*e.year) : nlohmann::json()},
                   {"count", e.count}});
  }
  return out;
}

}  // namespace sd2

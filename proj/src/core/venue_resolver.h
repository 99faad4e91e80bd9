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

// Venue alias table: maps raw venue strings (as they appear in bibliographic
// records) onto canonical venues and carries the CCF classification of each.
//
// Resolution is two-staged. An exact match on the normalized alias wins.
// Otherwise a bounded edit-distance search looks for the single venue whose
// closest alias is within both distance thresholds; anything ambiguous stays
// unresolved.

#ifndef SD2_CORE_VENUE_RESOLVER_H_
#define SD2_CORE_VENUE_RESOLVER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace sd2 {

enum class CcfRank { kA, kB, kC, kUnranked };

enum class CcfCategory {
  kNone,
  kSystemArchitecture,
  kNetworks,
  kSecurity,
  kDatabaseMining,
  kSoftwareEngineering,
  kTheory,
  kComputerGraphics,
  kArtificialIntelligence,
  kHumanComputerInteraction,
  kInterdisciplinary,
};

std::string_view CcfRankName(CcfRank rank);  // "A", "B", "C", "Unranked"
std::optional<CcfRank> ParseCcfRank(std::string_view name);
// Lowercase category names, e.g. "database and mining"; kNone -> "none".
std::string_view CcfCategoryName(CcfCategory category);
std::optional<CcfCategory> ParseCcfCategory(std::string_view name);

struct VenueRecord {
  std::string id;
  std::string canonical_name;
  std::vector<std::string> aliases;  // always contains canonical_name
  CcfCategory category = CcfCategory::kNone;
  CcfRank rank = CcfRank::kUnranked;
};

struct Classification {
  CcfCategory category = CcfCategory::kNone;
  CcfRank rank = CcfRank::kUnranked;

  bool operator==(const Classification&) const = default;
};

// Lowercases ASCII, turns punctuation into spaces, collapses whitespace and
// strips leading articles ("the", "a", "an"). Idempotent.
std::string NormalizeName(std::string_view raw);

// Optimal-string-alignment distance: insertions, deletions, substitutions
// and adjacent transpositions each cost 1.
size_t EditDistance(std::string_view a, std::string_view b);

// Same metric, but gives up once the distance provably exceeds `limit` and
// returns limit + 1 in that case.
size_t BoundedEditDistance(std::string_view a, std::string_view b,
                           size_t limit);

struct FuzzyThresholds {
  size_t max_distance = 2;
  // Fraction of the alias length, rounded up.
  double max_fraction = 0.10;

  size_t LimitFor(size_t alias_length) const;
};

struct Resolution {
  std::optional<size_t> venue;  // index into VenueTable::records()
  size_t distance = 0;
  bool fuzzy = false;
};

class VenueTable {
 public:
  VenueTable() = default;
  // Throws Error(kInvalidArgument) on duplicate ids or overlapping aliases.
  explicit VenueTable(std::vector<VenueRecord> venues,
                      FuzzyThresholds thresholds = {});

  // Parses the venues file (JSON list). Throws FileNotReadable or
  // SchemaViolation.
  static VenueTable LoadFile(const std::string& path);
  static VenueTable FromJson(const nlohmann::json& doc,
                             const std::string& origin);

  Resolution Resolve(std::string_view raw) const;
  // Convenience wrapper: the resolved venue id, if any.
  std::optional<std::string> ResolveId(std::string_view raw) const;

  // Throws Error(kUnknownVenueId).
  Classification Classify(std::string_view venue_id) const;

  const VenueRecord* Find(std::string_view venue_id) const;
  std::optional<size_t> IndexOf(std::string_view venue_id) const;
  const std::vector<VenueRecord>& records() const { return venues_; }
  const FuzzyThresholds& thresholds() const { return thresholds_; }

  nlohmann::json ToJson() const;

 private:
  std::vector<VenueRecord> venues_;
  FuzzyThresholds thresholds_;
  std::unordered_map<std::string, size_t> by_id_;
  std::unordered_map<std::string, size_t> by_alias_;
  // (normalized alias, venue index), sorted by alias length.
  std::vector<std::pair<std::string, size_t>> normalized_aliases_;
};

}  // namespace sd2

#endif  // SD2_CORE_VENUE_RESOLVER_H_

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

#include "core/venue_resolver.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>

#include "core/error.h"

namespace sd2 {

namespace {

constexpr std::array<std::pair<CcfCategory, std::string_view>, 11>
    kCategoryNames = {{
        {CcfCategory::kNone, "none"},
        {CcfCategory::kSystemArchitecture, "system and architecture"},
        {CcfCategory::kNetworks, "networks"},
        {CcfCategory::kSecurity, "security"},
        {CcfCategory::kDatabaseMining, "database and mining"},
        {CcfCategory::kSoftwareEngineering, "software engineering"},
        {CcfCategory::kTheory, "theory"},
        {CcfCategory::kComputerGraphics, "computer graphics"},
        {CcfCategory::kArtificialIntelligence, "artificial intelligence"},
        {CcfCategory::kHumanComputerInteraction, "human-computer interaction"},
        {CcfCategory::kInterdisciplinary, "interdisciplinary"},
    }};

constexpr std::array<std::string_view, 3> kArticles = {"the ", "a ", "an "};

bool IsAsciiPunct(unsigned char c) {
  return (c >= 0x21 && c <= 0x2f) || (c >= 0x3a && c <= 0x40) ||
         (c >= 0x5b && c <= 0x60) || (c >= 0x7b && c <= 0x7e);
}

bool IsAsciiSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// The optimal-string-alignment recurrence over three rolling rows. Returns
// limit + 1 as soon as no cell of the two most recent rows can lead to a
// distance <= limit.
size_t OsaDistance(std::string_view a, std::string_view b, size_t limit) {
  const size_t n = a.size();
  const size_t m = b.size();
  if ((n > m ? n - m : m - n) > limit) return limit + 1;
  std::vector<size_t> prev2(m + 1), prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = j;
  size_t prev_min = 0;
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    size_t row_min = cur[0];
    for (size_t j = 1; j <= m; ++j) {
      const size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      size_t best = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        best = std::min(best, prev2[j - 2] + 1);
      }
      cur[j] = best;
      row_min = std::min(row_min, best);
    }
    if (row_min > limit && prev_min + 1 > limit) return limit + 1;
    prev_min = row_min;
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return std::min(prev[m], limit + 1);
}

}  // namespace

std::string_view CcfRankName(CcfRank rank) {
  switch (rank) {
    case CcfRank::kA: return "A";
    case CcfRank::kB: return "B";
    case CcfRank::kC: return "C";
    case CcfRank::kUnranked: return "Unranked";
  }
  return "Unranked";
}

std::optional<CcfRank> ParseCcfRank(std::string_view name) {
  if (name == "A") return CcfRank::kA;
  if (name == "B") return CcfRank::kB;
  if (name == "C") return CcfRank::kC;
  if (name == "Unranked") return CcfRank::kUnranked;
  return std::nullopt;
}

std::string_view CcfCategoryName(CcfCategory category) {
  for (const auto& [value, name] : kCategoryNames) {
    if (value == category) return name;
  }
  return "none";
}

std::optional<CcfCategory> ParseCcfCategory(std::string_view name) {
  std::string lowered(name);
  for (char& c : lowered) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  for (const auto& [value, known] : kCategoryNames) {
    if (known == lowered) return value;
  }
  return std::nullopt;
}

std::string NormalizeName(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (unsigned char c : raw) {
    if (IsAsciiSpace(c) || IsAsciiPunct(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c - 'A' + 'a');
    out.push_back(static_cast<char>(c));
  }
  // An article is only dropped when something follows it.
  for (bool stripped = true; stripped;) {
    stripped = false;
    for (std::string_view article : kArticles) {
      if (out.size() > article.size() && out.starts_with(article)) {
        out.erase(0, article.size());
        stripped = true;
      }
    }
  }
  return out;
}

size_t EditDistance(std::string_view a, std::string_view b) {
  return OsaDistance(a, b, std::numeric_limits<size_t>::max() - 1);
}

size_t BoundedEditDistance(std::string_view a, std::string_view b,
                           size_t limit) {
  return OsaDistance(a, b, limit);
}

size_t FuzzyThresholds::LimitFor(size_t alias_length) const {
  const double fractional =
      std::ceil(max_fraction * static_cast<double>(alias_length) - 1e-9);
  return std::min(max_distance, static_cast<size_t>(std::max(0.0, fractional)));
}

VenueTable::VenueTable(std::vector<VenueRecord> venues,
                       FuzzyThresholds thresholds)
    : venues_(std::move(venues)), thresholds_(thresholds) {
  for (size_t i = 0; i < venues_.size(); ++i) {
    VenueRecord& venue = venues_[i];
    if (venue.id.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "venue with empty id");
    }
    if (!by_id_.emplace(venue.id, i).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate venue id '" + venue.id + "'");
    }
    if (std::find(venue.aliases.begin(), venue.aliases.end(),
                  venue.canonical_name) == venue.aliases.end()) {
      venue.aliases.insert(venue.aliases.begin(), venue.canonical_name);
    }
    for (const std::string& alias : venue.aliases) {
      std::string key = NormalizeName(alias);
      if (key.empty()) continue;
      auto [it, inserted] = by_alias_.emplace(key, i);
      if (!inserted && it->second != i) {
        throw Error(ErrorCode::kInvalidArgument,
                    "alias '" + alias + "' is shared by venues '" +
                        venues_[it->second].id + "' and '" + venue.id + "'");
      }
      if (inserted) normalized_aliases_.emplace_back(std::move(key), i);
    }
  }
  std::stable_sort(normalized_aliases_.begin(), normalized_aliases_.end(),
                   [](const auto& x, const auto& y) {
                     return x.first.size() < y.first.size();
                   });
}

VenueTable VenueTable::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kFileNotReadable, "cannot read '" + path + "'");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaViolation(path, 1, "venues", e.what());
  }
  return FromJson(doc, path);
}

VenueTable VenueTable::FromJson(const nlohmann::json& doc,
                                const std::string& origin) {
  if (!doc.is_array()) {
    throw SchemaViolation(origin, 1, "venues", "expected a JSON list");
  }
  std::vector<VenueRecord> venues;
  venues.reserve(doc.size());
  for (size_t i = 0; i < doc.size(); ++i) {
    const nlohmann::json& entry = doc[i];
    const size_t entry_no = i + 1;
    if (!entry.is_object()) {
      throw SchemaViolation(origin, entry_no, "venue", "expected an object");
    }
    VenueRecord venue;
    auto id = entry.find("id");
    if (id == entry.end() || !id->is_string() ||
        id->get_ref<const std::string&>().empty()) {
      throw SchemaViolation(origin, entry_no, "id", "missing or empty");
    }
    venue.id = id->get<std::string>();
    auto canonical = entry.find("canonical");
    if (canonical == entry.end() || !canonical->is_string()) {
      throw SchemaViolation(origin, entry_no, "canonical", "missing");
    }
    venue.canonical_name = canonical->get<std::string>();
    if (auto aliases = entry.find("aliases"); aliases != entry.end()) {
      if (!aliases->is_array()) {
        throw SchemaViolation(origin, entry_no, "aliases", "expected a list");
      }
      for (const auto& alias : *aliases) {
        if (!alias.is_string()) {
          throw SchemaViolation(origin, entry_no, "aliases",
                                "expected strings");
        }
        venue.aliases.push_back(alias.get<std::string>());
      }
    }
    if (auto category = entry.find("category");
        category != entry.end() && !category->is_null()) {
      auto parsed = category->is_string()
                        ? ParseCcfCategory(category->get<std::string>())
                        : std::nullopt;
      if (!parsed) {
        throw SchemaViolation(origin, entry_no, "category", "unknown category");
      }
      venue.category = *parsed;
    }
    if (auto rank = entry.find("rank"); rank != entry.end() && !rank->is_null()) {
      auto parsed =
          rank->is_string() ? ParseCcfRank(rank->get<std::string>()) : std::nullopt;
      if (!parsed || *parsed == CcfRank::kUnranked) {
        throw SchemaViolation(origin, entry_no, "rank", "expected A, B or C");
      }
      venue.rank = *parsed;
    }
    venues.push_back(std::move(venue));
  }
  try {
    return VenueTable(std::move(venues));
  } catch (const Error& e) {
    throw SchemaViolation(origin, 1, "aliases", e.what());
  }
}

Resolution VenueTable::Resolve(std::string_view raw) const {
  Resolution result;
  const std::string key = NormalizeName(raw);
  if (key.empty()) return result;
  if (auto it = by_alias_.find(key); it != by_alias_.end()) {
    result.venue = it->second;
    return result;
  }
  size_t best = std::numeric_limits<size_t>::max();
  std::optional<size_t> winner;
  bool tied = false;
  for (const auto& [alias, venue] : normalized_aliases_) {
    const size_t limit = thresholds_.LimitFor(alias.size());
    if (limit == 0) continue;
    const size_t distance = BoundedEditDistance(key, alias, limit);
    if (distance > limit || distance > best) continue;
    if (distance < best) {
      best = distance;
      winner = venue;
      tied = false;
    } else if (venue != *winner) {
      tied = true;
    }
  }
  if (winner && !tied) {
    result.venue = winner;
    result.distance = best;
    result.fuzzy = true;
  }
  return result;
}

std::optional<std::string> VenueTable::ResolveId(std::string_view raw) const {
  Resolution r = Resolve(raw);
  if (!r.venue) return std::nullopt;
  return venues_[*r.venue].id;
}

Classification VenueTable::Classify(std::string_view venue_id) const {
  const VenueRecord* venue = Find(venue_id);
  if (venue == nullptr) {
    throw Error(ErrorCode::kUnknownVenueId,
                "unknown venue '" + std::string(venue_id) + "'");
  }
  return {venue->category, venue->rank};
}

const VenueRecord* VenueTable::Find(std::string_view venue_id) const {
  auto index = IndexOf(venue_id);
  return index ? &venues_[*index] : nullptr;
}

std::optional<size_t> VenueTable::IndexOf(std::string_view venue_id) const {
  auto it = by_id_.find(std::string(venue_id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

nlohmann::json VenueTable::ToJson() const {
  nlohmann::json out = nlohmann::json::array();
  for (const VenueRecord& venue : venues_) {
    nlohmann::json entry = {{"id", venue.id},
                            {"canonical", venue.canonical_name},
                            {"aliases", venue.aliases}};
    entry["category"] = venue.category == CcfCategory::kNone
                            ? nlohmann::json(nullptr)
                            : nlohmann::json(CcfCategoryName(venue.category));
    entry["rank"] = venue.rank == CcfRank::kUnranked
                        ? nlohmann::json(nullptr)
                        : nlohmann::json(CcfRankName(venue.rank));
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace sd2

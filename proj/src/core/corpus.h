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

// Immutable in-memory bibliographic snapshot.
//
// A Corpus is built once from four input files (papers, citations, venues,
// scholar profiles) or from a serialized store, and never changes
// afterwards. All lookups are const and safe to call from any number of
// threads.

#ifndef SD2_CORE_CORPUS_H_
#define SD2_CORE_CORPUS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core/paper_set.h"
#include "core/venue_resolver.h"
#include "json.hpp"

namespace sd2 {

inline constexpr int kMinYear = 1900;
inline constexpr int kMaxYear = 2100;

struct PaperRecord {
  std::string id;
  std::string title;
  std::optional<int> year;            // nullopt = Unknown
  std::optional<std::string> venue;   // resolved VenueId; nullopt = Unknown
  std::optional<std::string> raw_venue;
  std::vector<std::string> authors;   // advisory; profiles are authoritative
};

struct CitationLink {
  PaperIndex citing;
  PaperIndex cited;

  bool operator==(const CitationLink&) const = default;
};

struct ScholarProfile {
  std::string id;
  std::string name;
  std::vector<PaperIndex> papers;         // ascending
  std::vector<std::string> unresolved;    // listed ids missing from corpus
};

// Counts of everything accepted or dropped while loading. All zero for an
// empty input.
struct LoadReport {
  uint64_t papers_accepted = 0;
  uint64_t papers_malformed = 0;
  uint64_t papers_unknown_year = 0;
  uint64_t papers_unknown_venue = 0;   // no venue given
  uint64_t venues_unresolved = 0;      // venue given but not in alias table
  uint64_t venues_fuzzy = 0;           // resolved through the distance fallback
  uint64_t links_accepted = 0;
  uint64_t links_malformed = 0;
  uint64_t links_self_citation = 0;
  uint64_t links_dangling = 0;
  uint64_t links_duplicate = 0;
  uint64_t profiles_accepted = 0;
  uint64_t profiles_malformed = 0;
  uint64_t profile_papers_unresolved = 0;

  bool operator==(const LoadReport&) const = default;

  nlohmann::json ToJson() const;
  static LoadReport FromJson(const nlohmann::json& doc);
};

// A profile as written in the profiles file, before paper ids are resolved.
struct RawProfile {
  std::string id;
  std::string name;
  std::vector<std::string> paper_ids;
};

struct CorpusPaths {
  std::string papers;
  std::string citations;
  std::string venues;
  std::string profiles;
};

class Corpus {
 public:
  // Parses and validates the four input files. Throws FileNotReadable,
  // SchemaViolation or DuplicatePaperId; row-level problems are dropped and
  // counted in report().
  static Corpus Load(const CorpusPaths& paths);

  // Assembles a corpus from already-validated parts (store loading, tests).
  // Links are given as (citing id, cited id) pairs and must be valid.
  static Corpus FromParts(
      std::vector<PaperRecord> papers,
      const std::vector<std::pair<std::string, std::string>>& links,
      VenueTable venues, const std::vector<RawProfile>& profiles,
      LoadReport report);

  size_t paper_count() const { return papers_.size(); }
  size_t link_count() const { return links_.size(); }
  const std::vector<PaperRecord>& papers() const { return papers_; }
  const PaperRecord& paper(PaperIndex p) const { return papers_[p]; }
  std::optional<PaperIndex> FindPaper(std::string_view id) const;
  // Throws Error(kUnknownPaperId).
  PaperIndex PaperIndexOf(std::string_view id) const;

  // Links sorted by (cited, citing).
  const std::vector<CitationLink>& links() const { return links_; }
  // Links whose cited end is p, as a contiguous slice of links().
  std::span<const CitationLink> LinksInto(PaperIndex p) const;
  // Papers citing p, ascending.
  std::span<const PaperIndex> CitingOf(PaperIndex p) const;
  // Papers cited by p, ascending.
  std::span<const PaperIndex> CitedBy(PaperIndex p) const;
  size_t CitationCount(PaperIndex p) const { return CitingOf(p).size(); }

  // Id-level lookup: the citing papers of `id`, ascending. Throws
  // Error(kUnknownPaperId).
  std::vector<std::string> CitingPapers(std::string_view id) const;

  // Scholars in registration (profiles file) order.
  const std::vector<ScholarProfile>& scholars() const { return scholars_; }
  std::optional<size_t> FindScholar(std::string_view id) const;
  // Throws Error(kUnknownScholarId).
  size_t ScholarIndexOf(std::string_view id) const;
  const ScholarProfile& scholar(size_t s) const { return scholars_[s]; }
  // Papers listed in the scholar's profile that exist in the corpus,
  // labelled with the scholar's display name.
  PaperSet PapersOf(std::string_view scholar_id) const;

  // All papers; the identity element for intersections.
  const std::vector<PaperIndex>& universe() const { return universe_; }

  std::span<const PaperIndex> PapersAtVenue(std::string_view venue_id) const;

  const VenueTable& venues() const { return venues_; }
  // Classification of the paper's venue; (None, Unranked) when Unknown.
  Classification ClassifyPaper(PaperIndex p) const;

  const LoadReport& report() const { return report_; }

 private:
  Corpus() = default;
  void BuildIndexes();

  std::vector<PaperRecord> papers_;
  std::unordered_map<std::string, PaperIndex> paper_by_id_;
  std::vector<PaperIndex> universe_;

  std::vector<CitationLink> links_;         // sorted by (cited, citing)
  std::vector<PaperIndex> citing_flat_;     // citing ends, parallel to links_
  std::vector<uint32_t> into_offsets_;      // per cited paper, size n + 1
  std::vector<PaperIndex> cited_flat_;      // cited ends grouped by citer
  std::vector<uint32_t> out_offsets_;

  std::vector<ScholarProfile> scholars_;
  std::unordered_map<std::string, size_t> scholar_by_id_;

  std::unordered_map<std::string, std::vector<PaperIndex>> papers_by_venue_;
  std::vector<Classification> paper_class_;

  VenueTable venues_;
  LoadReport report_;
};

}  // namespace sd2

#endif  // SD2_CORE_CORPUS_H_

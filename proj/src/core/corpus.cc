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

#include "core/corpus.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <tuple>
#include <unordered_set>

#include "core/error.h"

namespace sd2 {

namespace {

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileNotReadable, "cannot read '" + path + "'");
  }
  return in;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r' || s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string_view StripBom(std::string_view s) {
  if (s.starts_with("\xEF\xBB\xBF")) s.remove_prefix(3);
  return s;
}

// Calls `fn(line_no, object)` for every non-blank line of a JSON Lines file.
// A line that is not a JSON object makes the whole file unusable.
void ForEachJsonLine(
    const std::string& path,
    const std::function<void(size_t, const nlohmann::json&)>& fn) {
  std::ifstream in = OpenOrThrow(path);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = Trim(line_no == 1 ? StripBom(line) : line);
    if (text.empty()) continue;
    nlohmann::json row;
    try {
      row = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaViolation(path, line_no, "json", e.what());
    }
    if (!row.is_object()) {
      throw SchemaViolation(path, line_no, "json", "expected an object");
    }
    fn(line_no, row);
  }
}

std::string_view Unquote(std::string_view field) {
  field = Trim(field);
  if (field.size() >= 2 && field.front() == '"' && field.back() == '"') {
    field = field.substr(1, field.size() - 2);
  }
  return field;
}

// Returns nullopt when the row is malformed.
std::optional<PaperRecord> ParsePaperRow(const nlohmann::json& row) {
  PaperRecord paper;
  auto id = row.find("id");
  if (id == row.end() || !id->is_string()) return std::nullopt;
  paper.id = id->get<std::string>();
  if (paper.id.empty()) return std::nullopt;

  if (auto title = row.find("title"); title != row.end()) {
    if (!title->is_string()) return std::nullopt;
    paper.title = title->get<std::string>();
  }
  if (auto year = row.find("year"); year != row.end() && !year->is_null()) {
    if (!year->is_number_integer()) return std::nullopt;
    const int64_t value = year->get<int64_t>();
    if (value < kMinYear || value > kMaxYear) return std::nullopt;
    paper.year = static_cast<int>(value);
  }
  if (auto venue = row.find("venue"); venue != row.end() && !venue->is_null()) {
    if (!venue->is_string()) return std::nullopt;
    std::string raw = venue->get<std::string>();
    if (!Trim(raw).empty()) paper.raw_venue = std::move(raw);
  }
  if (auto authors = row.find("authors");
      authors != row.end() && !authors->is_null()) {
    if (!authors->is_array()) return std::nullopt;
    std::unordered_set<std::string> seen;
    for (const auto& author : *authors) {
      if (!author.is_string()) return std::nullopt;
      std::string name = author.get<std::string>();
      if (name.empty()) return std::nullopt;
      if (seen.insert(name).second) paper.authors.push_back(std::move(name));
    }
  }
  return paper;
}

std::optional<RawProfile> ParseProfileRow(const nlohmann::json& row) {
  RawProfile profile;
  auto id = row.find("scholar_id");
  auto name = row.find("name");
  auto ids = row.find("paper_ids");
  if (id == row.end() || !id->is_string() || name == row.end() ||
      !name->is_string() || ids == row.end() || !ids->is_array()) {
    return std::nullopt;
  }
  profile.id = id->get<std::string>();
  profile.name = name->get<std::string>();
  if (profile.id.empty() || profile.name.empty()) return std::nullopt;
  for (const auto& paper_id : *ids) {
    if (!paper_id.is_string()) return std::nullopt;
    profile.paper_ids.push_back(paper_id.get<std::string>());
  }
  return profile;
}

}  // namespace

nlohmann::json LoadReport::ToJson() const {
  return {
      {"papers_accepted", papers_accepted},
      {"papers_malformed", papers_malformed},
      {"papers_unknown_year", papers_unknown_year},
      {"papers_unknown_venue", papers_unknown_venue},
      {"venues_unresolved", venues_unresolved},
      {"venues_fuzzy", venues_fuzzy},
      {"links_accepted", links_accepted},
      {"links_malformed", links_malformed},
      {"links_self_citation", links_self_citation},
      {"links_dangling", links_dangling},
      {"links_duplicate", links_duplicate},
      {"profiles_accepted", profiles_accepted},
      {"profiles_malformed", profiles_malformed},
      {"profile_papers_unresolved", profile_papers_unresolved},
  };
}

LoadReport LoadReport::FromJson(const nlohmann::json& doc) {
  LoadReport r;
  r.papers_accepted = doc.at("papers_accepted").get<uint64_t>();
  r.papers_malformed = doc.at("papers_malformed").get<uint64_t>();
  r.papers_unknown_year = doc.at("papers_unknown_year").get<uint64_t>();
  r.papers_unknown_venue = doc.at("papers_unknown_venue").get<uint64_t>();
  r.venues_unresolved = doc.at("venues_unresolved").get<uint64_t>();
  r.venues_fuzzy = doc.at("venues_fuzzy").get<uint64_t>();
  r.links_accepted = doc.at("links_accepted").get<uint64_t>();
  r.links_malformed = doc.at("links_malformed").get<uint64_t>();
  r.links_self_citation = doc.at("links_self_citation").get<uint64_t>();
  r.links_dangling = doc.at("links_dangling").get<uint64_t>();
  r.links_duplicate = doc.at("links_duplicate").get<uint64_t>();
  r.profiles_accepted = doc.at("profiles_accepted").get<uint64_t>();
  r.profiles_malformed = doc.at("profiles_malformed").get<uint64_t>();
  r.profile_papers_unresolved =
      doc.at("profile_papers_unresolved").get<uint64_t>();
  return r;
}

Corpus Corpus::Load(const CorpusPaths& paths) {
  LoadReport report;
  VenueTable venues = VenueTable::LoadFile(paths.venues);

  std::vector<PaperRecord> papers;
  std::unordered_set<std::string> paper_ids;
  ForEachJsonLine(paths.papers, [&](size_t line_no, const nlohmann::json& row) {
    std::optional<PaperRecord> paper = ParsePaperRow(row);
    if (!paper) {
      ++report.papers_malformed;
      return;
    }
    if (!paper_ids.insert(paper->id).second) {
      throw Error(ErrorCode::kDuplicatePaperId,
                  paths.papers + ":" + std::to_string(line_no) +
                      ": duplicate paper id '" + paper->id + "'");
    }
    if (!paper->year) ++report.papers_unknown_year;
    if (!paper->raw_venue) {
      ++report.papers_unknown_venue;
    } else {
      Resolution r = venues.Resolve(*paper->raw_venue);
      if (!r.venue) {
        ++report.venues_unresolved;
      } else {
        if (r.fuzzy) ++report.venues_fuzzy;
        paper->venue = venues.records()[*r.venue].id;
      }
    }
    papers.push_back(std::move(*paper));
  });
  report.papers_accepted = papers.size();

  std::vector<std::pair<std::string, std::string>> links;
  {
    std::ifstream in = OpenOrThrow(paths.citations);
    std::set<std::pair<std::string, std::string>> seen;
    std::string line;
    size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view text = Trim(line_no == 1 ? StripBom(line) : line);
      if (text.empty()) continue;
      if (!header_seen) {
        const size_t comma = text.find(',');
        if (comma == std::string_view::npos ||
            Unquote(text.substr(0, comma)) != "citing" ||
            Unquote(text.substr(comma + 1)) != "cited") {
          throw SchemaViolation(paths.citations, line_no, "header",
                                "expected 'citing,cited'");
        }
        header_seen = true;
        continue;
      }
      const size_t comma = text.find(',');
      if (comma == std::string_view::npos ||
          text.find(',', comma + 1) != std::string_view::npos) {
        ++report.links_malformed;
        continue;
      }
      std::string citing(Unquote(text.substr(0, comma)));
      std::string cited(Unquote(text.substr(comma + 1)));
      if (citing.empty() || cited.empty()) {
        ++report.links_malformed;
      } else if (citing == cited) {
        ++report.links_self_citation;
      } else if (!paper_ids.contains(citing) || !paper_ids.contains(cited)) {
        ++report.links_dangling;
      } else if (!seen.emplace(citing, cited).second) {
        ++report.links_duplicate;
      } else {
        links.emplace_back(std::move(citing), std::move(cited));
      }
    }
  }
  report.links_accepted = links.size();

  std::vector<RawProfile> profiles;
  {
    std::unordered_set<std::string> scholar_ids;
    ForEachJsonLine(paths.profiles, [&](size_t, const nlohmann::json& row) {
      std::optional<RawProfile> profile = ParseProfileRow(row);
      if (!profile || !scholar_ids.insert(profile->id).second) {
        ++report.profiles_malformed;
        return;
      }
      std::unordered_set<std::string> listed;
      for (const std::string& id : profile->paper_ids) {
        if (listed.insert(id).second && !paper_ids.contains(id)) {
          ++report.profile_papers_unresolved;
        }
      }
      profiles.push_back(std::move(*profile));
    });
    report.profiles_accepted = profiles.size();
  }

  return FromParts(std::move(papers), links, std::move(venues), profiles,
                   report);
}

Corpus Corpus::FromParts(
    std::vector<PaperRecord> papers,
    const std::vector<std::pair<std::string, std::string>>& links,
    VenueTable venues, const std::vector<RawProfile>& profiles,
    LoadReport report) {
  Corpus corpus;
  corpus.venues_ = std::move(venues);
  corpus.report_ = report;
  corpus.papers_ = std::move(papers);
  std::sort(corpus.papers_.begin(), corpus.papers_.end(),
            [](const PaperRecord& a, const PaperRecord& b) { return a.id < b.id; });
  corpus.paper_by_id_.reserve(corpus.papers_.size());
  for (PaperIndex i = 0; i < corpus.papers_.size(); ++i) {
    const PaperRecord& paper = corpus.papers_[i];
    if (!corpus.paper_by_id_.emplace(paper.id, i).second) {
      throw Error(ErrorCode::kDuplicatePaperId,
                  "duplicate paper id '" + paper.id + "'");
    }
    if (paper.venue && !corpus.venues_.Find(*paper.venue)) {
      throw Error(ErrorCode::kUnknownVenueId,
                  "paper '" + paper.id + "' refers to unknown venue '" +
                      *paper.venue + "'");
    }
  }

  corpus.links_.reserve(links.size());
  for (const auto& [citing, cited] : links) {
    const PaperIndex from = corpus.PaperIndexOf(citing);
    const PaperIndex to = corpus.PaperIndexOf(cited);
    if (from == to) {
      throw Error(ErrorCode::kInvalidArgument, "self-citation '" + citing + "'");
    }
    corpus.links_.push_back({from, to});
  }
  std::sort(corpus.links_.begin(), corpus.links_.end(),
            [](const CitationLink& a, const CitationLink& b) {
              return std::tie(a.cited, a.citing) < std::tie(b.cited, b.citing);
            });
  if (std::adjacent_find(corpus.links_.begin(), corpus.links_.end()) !=
      corpus.links_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate citation link");
  }

  for (const RawProfile& raw : profiles) {
    ScholarProfile profile{raw.id, raw.name, {}, {}};
    for (const std::string& id : raw.paper_ids) {
      if (auto p = corpus.FindPaper(id)) {
        profile.papers.push_back(*p);
      } else {
        profile.unresolved.push_back(id);
      }
    }
    std::sort(profile.papers.begin(), profile.papers.end());
    profile.papers.erase(
        std::unique(profile.papers.begin(), profile.papers.end()),
        profile.papers.end());
    std::sort(profile.unresolved.begin(), profile.unresolved.end());
    profile.unresolved.erase(
        std::unique(profile.unresolved.begin(), profile.unresolved.end()),
        profile.unresolved.end());
    if (!corpus.scholar_by_id_.emplace(profile.id, corpus.scholars_.size())
             .second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate scholar id '" + profile.id + "'");
    }
    corpus.scholars_.push_back(std::move(profile));
  }

  corpus.BuildIndexes();
  return corpus;
}

void Corpus::BuildIndexes() {
  const size_t n = papers_.size();
  universe_.resize(n);
  for (PaperIndex i = 0; i < n; ++i) universe_[i] = i;

  // links_ is sorted by (cited, citing): the inbound index is a CSR view.
  into_offsets_.assign(n + 1, 0);
  citing_flat_.resize(links_.size());
  for (size_t k = 0; k < links_.size(); ++k) {
    ++into_offsets_[links_[k].cited + 1];
    citing_flat_[k] = links_[k].citing;
  }
  for (size_t i = 0; i < n; ++i) into_offsets_[i + 1] += into_offsets_[i];

  out_offsets_.assign(n + 1, 0);
  for (const CitationLink& link : links_) ++out_offsets_[link.citing + 1];
  for (size_t i = 0; i < n; ++i) out_offsets_[i + 1] += out_offsets_[i];
  cited_flat_.resize(links_.size());
  std::vector<uint32_t> cursor(out_offsets_.begin(), out_offsets_.end() - 1);
  // Iterating links_ in cited order keeps each citer's slice ascending.
  for (const CitationLink& link : links_) {
    cited_flat_[cursor[link.citing]++] = link.cited;
  }

  paper_class_.assign(n, Classification{});
  for (PaperIndex i = 0; i < n; ++i) {
    if (const auto& venue = papers_[i].venue) {
      papers_by_venue_[*venue].push_back(i);
      paper_class_[i] = venues_.Classify(*venue);
    }
  }
}

std::optional<PaperIndex> Corpus::FindPaper(std::string_view id) const {
  auto it = paper_by_id_.find(std::string(id));
  if (it == paper_by_id_.end()) return std::nullopt;
  return it->second;
}

PaperIndex Corpus::PaperIndexOf(std::string_view id) const {
  if (auto p = FindPaper(id)) return *p;
  throw Error(ErrorCode::kUnknownPaperId,
              "unknown paper '" + std::string(id) + "'");
}

std::span<const CitationLink> Corpus::LinksInto(PaperIndex p) const {
  return std::span<const CitationLink>(links_).subspan(
      into_offsets_[p], into_offsets_[p + 1] - into_offsets_[p]);
}

std::span<const PaperIndex> Corpus::CitingOf(PaperIndex p) const {
  return std::span<const PaperIndex>(citing_flat_)
      .subspan(into_offsets_[p], into_offsets_[p + 1] - into_offsets_[p]);
}

std::span<const PaperIndex> Corpus::CitedBy(PaperIndex p) const {
  return std::span<const PaperIndex>(cited_flat_)
      .subspan(out_offsets_[p], out_offsets_[p + 1] - out_offsets_[p]);
}

std::vector<std::string> Corpus::CitingPapers(std::string_view id) const {
  std::vector<std::string> out;
  for (PaperIndex q : CitingOf(PaperIndexOf(id))) out.push_back(papers_[q].id);
  return out;
}

std::optional<size_t> Corpus::FindScholar(std::string_view id) const {
  auto it = scholar_by_id_.find(std::string(id));
  if (it == scholar_by_id_.end()) return std::nullopt;
  return it->second;
}

size_t Corpus::ScholarIndexOf(std::string_view id) const {
  if (auto s = FindScholar(id)) return *s;
  throw Error(ErrorCode::kUnknownScholarId,
              "unknown scholar '" + std::string(id) + "'");
}

PaperSet Corpus::PapersOf(std::string_view scholar_id) const {
  const ScholarProfile& profile = scholars_[ScholarIndexOf(scholar_id)];
  return PaperSet{profile.papers, profile.name, std::nullopt};
}

std::span<const PaperIndex> Corpus::PapersAtVenue(
    std::string_view venue_id) const {
  auto it = papers_by_venue_.find(std::string(venue_id));
  if (it == papers_by_venue_.end()) return {};
  return it->second;
}

Classification Corpus::ClassifyPaper(PaperIndex p) const {
  return paper_class_[p];
}

}  // namespace sd2

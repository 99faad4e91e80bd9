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

#include "core/store.h"

#include <fstream>
#include <iterator>

#include "core/error.h"

namespace sd2 {

namespace {

constexpr const char* kStoreFormat = "sd2-store";

nlohmann::json OptionalString(const std::optional<std::string>& s) {
  return s ? nlohmann::json(*s) : nlohmann::json(nullptr);
}

}  // namespace

std::vector<uint8_t> SerializeStore(const Corpus& corpus) {
  nlohmann::json papers = nlohmann::json::array();
  for (const PaperRecord& paper : corpus.papers()) {
    papers.push_back({
        {"id", paper.id},
        {"title", paper.title},
        {"year", paper.year ? nlohmann::json(*paper.year) : nlohmann::json()},
        {"venue", OptionalString(paper.venue)},
        {"raw_venue", OptionalString(paper.raw_venue)},
        {"authors", paper.authors},
    });
  }
  nlohmann::json links = nlohmann::json::array();
  for (const CitationLink& link : corpus.links()) {
    links.push_back(nlohmann::json::array(
        {corpus.paper(link.citing).id, corpus.paper(link.cited).id}));
  }
  nlohmann::json scholars = nlohmann::json::array();
  for (const ScholarProfile& s : corpus.scholars()) {
    std::vector<std::string> ids;
    for (PaperIndex p : s.papers) ids.push_back(corpus.paper(p).id);
    ids.insert(ids.end(), s.unresolved.begin(), s.unresolved.end());
    scholars.push_back({{"scholar_id", s.id}, {"name", s.name}, {"paper_ids", ids}});
  }
  nlohmann::json doc = {
      {"format", kStoreFormat},
      {"version", kStoreVersion},
      {"venues", corpus.venues().ToJson()},
      {"papers", std::move(papers)},
      {"links", std::move(links)},
      {"scholars", std::move(scholars)},
      {"report", corpus.report().ToJson()},
  };
  return nlohmann::json::to_cbor(doc);
}

Corpus DeserializeStore(const std::vector<uint8_t>& bytes,
                        const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::from_cbor(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaViolation(origin, 1, "store", e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kStoreFormat) {
    throw SchemaViolation(origin, 1, "format", "not an sd2 store");
  }
  if (doc.value("version", 0) != kStoreVersion) {
    throw SchemaViolation(origin, 1, "version", "unsupported store version");
  }
  try {
    VenueTable venues = VenueTable::FromJson(doc.at("venues"), origin);
    std::vector<PaperRecord> papers;
    for (const auto& row : doc.at("papers")) {
      PaperRecord paper;
      paper.id = row.at("id").get<std::string>();
      paper.title = row.at("title").get<std::string>();
      if (!row.at("year").is_null()) paper.year = row.at("year").get<int>();
      if (!row.at("venue").is_null()) {
        paper.venue = row.at("venue").get<std::string>();
      }
      if (!row.at("raw_venue").is_null()) {
        paper.raw_venue = row.at("raw_venue").get<std::string>();
      }
      paper.authors = row.at("authors").get<std::vector<std::string>>();
      papers.push_back(std::move(paper));
    }
    std::vector<std::pair<std::string, std::string>> links;
    for (const auto& row : doc.at("links")) {
      links.emplace_back(row.at(0).get<std::string>(),
                         row.at(1).get<std::string>());
    }
    std::vector<RawProfile> profiles;
    for (const auto& row : doc.at("scholars")) {
      profiles.push_back({row.at("scholar_id").get<std::string>(),
                          row.at("name").get<std::string>(),
                          row.at("paper_ids").get<std::vector<std::string>>()});
    }
    return Corpus::FromParts(std::move(papers), links, std::move(venues),
                             profiles, LoadReport::FromJson(doc.at("report")));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaViolation(origin, 1, "store", e.what());
  }
}

void WriteStore(const Corpus& corpus, const std::string& path) {
  const std::vector<uint8_t> bytes = SerializeStore(corpus);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kFileNotReadable, "cannot write '" + path + "'");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(ErrorCode::kFileNotReadable, "short write to '" + path + "'");
  }
}

Corpus ReadStore(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileNotReadable, "cannot read '" + path + "'");
  }
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return DeserializeStore(bytes, path);
}

}  // namespace sd2

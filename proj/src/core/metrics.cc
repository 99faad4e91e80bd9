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

#include "core/metrics.h"

#include <algorithm>
#include <functional>

namespace sd2 {

nlohmann::json SetMetrics::ToJson() const {
  return {{"paper_count", paper_count},
          {"total_citations", total_citations},
          {"h_index", h_index}};
}

uint64_t HIndex(std::span<const uint64_t> counts) {
  std::vector<uint64_t> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  uint64_t h = 0;
  // sorted[h] is the (h+1)-th largest count.
  while (h < sorted.size() && sorted[h] >= h + 1) ++h;
  return h;
}

uint64_t CitationCount(const Corpus& corpus, std::string_view id) {
  return corpus.CitationCount(corpus.PaperIndexOf(id));
}

uint64_t PaperHIndex(const Corpus& corpus, PaperIndex p) {
  std::vector<uint64_t> counts;
  for (PaperIndex q : corpus.CitingOf(p)) {
    counts.push_back(corpus.CitationCount(q));
  }
  return HIndex(counts);
}

uint64_t PaperHIndex(const Corpus& corpus, std::string_view id) {
  return PaperHIndex(corpus, corpus.PaperIndexOf(id));
}

SetMetrics ComputeSetMetrics(const Corpus& corpus,
                             std::span<const PaperIndex> members) {
  SetMetrics m;
  std::vector<uint64_t> counts;
  counts.reserve(members.size());
  for (PaperIndex p : members) {
    counts.push_back(corpus.CitationCount(p));
    m.total_citations += counts.back();
  }
  m.paper_count = members.size();
  m.h_index = HIndex(counts);
  return m;
}

}  // namespace sd2

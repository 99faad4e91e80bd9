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

#ifndef SD2_CORE_METRICS_H_
#define SD2_CORE_METRICS_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "core/corpus.h"
#include "core/paper_set.h"
#include "json.hpp"

namespace sd2 {

struct SetMetrics {
  uint64_t paper_count = 0;
  uint64_t total_citations = 0;
  uint64_t h_index = 0;

  bool operator==(const SetMetrics&) const = default;
  nlohmann::json ToJson() const;
};

// Largest h such that at least h of the counts are >= h.
uint64_t HIndex(std::span<const uint64_t> counts);

// Number of papers citing `id`. Throws Error(kUnknownPaperId).
uint64_t CitationCount(const Corpus& corpus, std::string_view id);

// h-index over the citation counts of the papers citing p.
uint64_t PaperHIndex(const Corpus& corpus, PaperIndex p);
uint64_t PaperHIndex(const Corpus& corpus, std::string_view id);

// Per-paper summation: a citer of two members counts twice.
SetMetrics ComputeSetMetrics(const Corpus& corpus,
                             std::span<const PaperIndex> members);
inline SetMetrics ComputeSetMetrics(const Corpus& corpus, const PaperSet& set) {
  return ComputeSetMetrics(corpus, set.members);
}

}  // namespace sd2

#endif  // SD2_CORE_METRICS_H_

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

#ifndef SD2_CORE_PAPER_SET_H_
#define SD2_CORE_PAPER_SET_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sd2 {

// Dense position of a paper inside a Corpus. Papers are stored sorted by id,
// so ascending PaperIndex order is ascending id order.
using PaperIndex = uint32_t;

enum class OperatorLabel { kNot, kIgnore, kAnd, kOr };

std::string_view OperatorLabelName(OperatorLabel label);  // "not", ...
std::optional<OperatorLabel> ParseOperatorLabel(std::string_view name);

// Scholar id -> operator. Scholars absent from the map are implicitly
// labelled kIgnore.
using CombinationSpec = std::map<std::string, OperatorLabel>;

// A materialized, immutable set of papers with its display label.
struct PaperSet {
  std::vector<PaperIndex> members;  // ascending, no duplicates
  std::string label;
  std::optional<CombinationSpec> spec;

  size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool Contains(PaperIndex p) const {
    return std::binary_search(members.begin(), members.end(), p);
  }
};

}  // namespace sd2

#endif  // SD2_CORE_PAPER_SET_H_

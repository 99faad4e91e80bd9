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

// Parser for textual combination expressions, the inverse of FormatLabel:
//
//   expr     := positive ( " - " operand )*
//   positive := factor ( " + " factor )*      at most one factor is a group
//             | operand ( " | " operand )+
//   factor   := operand | "(" operand ( " | " operand )* ")"
//
// An operand is a scholar id or a scholar display name. A '-' only acts as
// an operator at the start of the expression or after whitespace, so
// hyphenated names parse as one operand.

#ifndef SD2_CORE_EXPRESSION_H_
#define SD2_CORE_EXPRESSION_H_

#include <string_view>

#include "core/corpus.h"
#include "core/paper_set.h"

namespace sd2 {

// Throws Error(kParseError) on malformed input (including an expression
// with no positive operand or a scholar used twice) and
// Error(kUnknownScholarId) for operands matching no scholar.
CombinationSpec ParseExpression(const Corpus& corpus, std::string_view text);

}  // namespace sd2

#endif  // SD2_CORE_EXPRESSION_H_

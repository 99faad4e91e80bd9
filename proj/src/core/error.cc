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

#include "core/error.h"

namespace sd2 {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kFileNotReadable: return "FileNotReadable";
    case ErrorCode::kSchemaViolation: return "SchemaViolation";
    case ErrorCode::kDuplicatePaperId: return "DuplicatePaperId";
    case ErrorCode::kUnknownPaperId: return "UnknownPaperId";
    case ErrorCode::kUnknownScholarId: return "UnknownScholarId";
    case ErrorCode::kUnknownVenueId: return "UnknownVenueId";
    case ErrorCode::kNoPositiveSelector: return "NoPositiveSelector";
    case ErrorCode::kInvalidRange: return "InvalidRange";
    case ErrorCode::kInvalidThresholds: return "InvalidThresholds";
    case ErrorCode::kInvalidAttributeForMode: return "InvalidAttributeForMode";
    case ErrorCode::kChainTooLong: return "ChainTooLong";
    case ErrorCode::kRepeatedAttribute: return "RepeatedAttribute";
    case ErrorCode::kInvalidGroupSpec: return "InvalidGroupSpec";
    case ErrorCode::kChainMismatch: return "ChainMismatch";
    case ErrorCode::kOffsetOnUnorderedAttribute:
      return "OffsetOnUnorderedAttribute";
    case ErrorCode::kNegativeValue: return "NegativeValue";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kPortInUse: return "PortInUse";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnknownHandle: return "UnknownHandle";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Internal";
}

SchemaViolation::SchemaViolation(std::string path, size_t line,
                                 std::string field, const std::string& detail)
    : Error(ErrorCode::kSchemaViolation,
            path + ":" + std::to_string(line) + ": field '" + field +
                "': " + detail),
      path_(std::move(path)),
      line_(line),
      field_(std::move(field)) {}

}  // namespace sd2

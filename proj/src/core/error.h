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

#ifndef SD2_CORE_ERROR_H_
#define SD2_CORE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sd2 {

// Every failure the engine can report. The numeric values are part of the
// C API (see include/sd2/sd2.h) and must not be renumbered.
enum class ErrorCode : int {
  kOk = 0,
  kFileNotReadable = 1,
  kSchemaViolation = 2,
  kDuplicatePaperId = 3,
  kUnknownPaperId = 4,
  kUnknownScholarId = 5,
  kUnknownVenueId = 6,
  kNoPositiveSelector = 7,
  kInvalidRange = 8,
  kInvalidThresholds = 9,
  kInvalidAttributeForMode = 10,
  kChainTooLong = 11,
  kRepeatedAttribute = 12,
  kInvalidGroupSpec = 13,
  kChainMismatch = 14,
  kOffsetOnUnorderedAttribute = 15,
  kNegativeValue = 16,
  kParseError = 17,
  kPortInUse = 18,
  kInvalidArgument = 19,
  kUnknownHandle = 20,
  kInternal = 21,
};

// Stable machine-readable name, e.g. "NoPositiveSelector".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised while reading an input file; carries the 1-based line and the
// offending field so diagnostics can point at the row.
class SchemaViolation : public Error {
 public:
  SchemaViolation(std::string path, size_t line, std::string field,
                  const std::string& detail);

  const std::string& path() const { return path_; }
  size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string path_;
  size_t line_;
  std::string field_;
};

}  // namespace sd2

#endif  // SD2_CORE_ERROR_H_

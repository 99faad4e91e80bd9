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

// A small JSON Schema subset for checking API responses: type (string or
// list, including "null"), properties, required, additionalProperties (bool),
// items, enum, minimum and local "#/definitions/..." references.

#ifndef SD2_TESTS_SUPPORT_JSON_SCHEMA_H_
#define SD2_TESTS_SUPPORT_JSON_SCHEMA_H_

#include <string>
#include <vector>

#include "json.hpp"

namespace sd2::testing {

// Returns one message per violation; empty when `doc` conforms.
std::vector<std::string> ValidateSchema(const nlohmann::json& schema,
                                        const nlohmann::json& doc);

// Loads schemas/<name>.json from the source tree.
nlohmann::json LoadSchema(const std::string& name);

}  // namespace sd2::testing

#endif  // SD2_TESTS_SUPPORT_JSON_SCHEMA_H_

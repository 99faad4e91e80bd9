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

// Serialized corpus snapshots. A store is a CBOR document holding the
// validated records, the venue table, the resolved profiles and the load
// report. Serialization is canonical: the same corpus always produces the
// same bytes.

#ifndef SD2_CORE_STORE_H_
#define SD2_CORE_STORE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "core/corpus.h"

namespace sd2 {

inline constexpr int kStoreVersion = 1;

std::vector<uint8_t> SerializeStore(const Corpus& corpus);
Corpus DeserializeStore(const std::vector<uint8_t>& bytes,
                        const std::string& origin = "<memory>");

// Throws FileNotReadable when the file cannot be written or read, and
// SchemaViolation when its content is not a store.
void WriteStore(const Corpus& corpus, const std::string& path);
Corpus ReadStore(const std::string& path);

}  // namespace sd2

#endif  // SD2_CORE_STORE_H_

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

#ifndef SD2_TESTS_SUPPORT_EXPECT_ERROR_H_
#define SD2_TESTS_SUPPORT_EXPECT_ERROR_H_

#include <gtest/gtest.h>

#include "core/error.h"

// Expects `stmt` to throw sd2::Error carrying `code`.
#define EXPECT_SD2_ERROR(stmt, expected)                                      \
  do {                                                                        \
    try {                                                                     \
      stmt;                                                                   \
      ADD_FAILURE() << "expected " << sd2::ErrorCodeName(expected) << " from "\
                    << #stmt;                                                 \
    } catch (const sd2::Error& e) {                                           \
      EXPECT_EQ(sd2::ErrorCodeName(e.code()), sd2::ErrorCodeName(expected))   \
          << e.what();                                                        \
    }                                                                         \
  } while (0)

#endif  // SD2_TESTS_SUPPORT_EXPECT_ERROR_H_

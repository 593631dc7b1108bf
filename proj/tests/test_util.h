//
// Copyright 2026 The TextDP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef TEXTDP_TESTS_TEST_UTIL_H_
#define TEXTDP_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "gtest/gtest.h"

#define TEXTDP_TEST_CONCAT_INNER_(a, b) a##b
#define TEXTDP_TEST_CONCAT_(a, b) TEXTDP_TEST_CONCAT_INNER_(a, b)

#define EXPECT_OK(expr)                                        \
  do {                                                         \
    const auto& _s = (expr);                                   \
    EXPECT_TRUE(_s.ok()) << ::textdp::testing::StatusOf(_s);   \
  } while (0)
#define ASSERT_OK(expr)                                        \
  do {                                                         \
    const auto& _s = (expr);                                   \
    ASSERT_TRUE(_s.ok()) << ::textdp::testing::StatusOf(_s);   \
  } while (0)

#define ASSERT_OK_AND_ASSIGN(lhs, rexpr)                                   \
  ASSERT_OK_AND_ASSIGN_IMPL_(TEXTDP_TEST_CONCAT_(_status_or_, __LINE__), \
                             lhs, rexpr)
#define ASSERT_OK_AND_ASSIGN_IMPL_(statusor, lhs, rexpr)       \
  auto statusor = (rexpr);                                     \
  ASSERT_TRUE(statusor.ok()) << statusor.status();             \
  lhs = std::move(statusor).value()

namespace textdp {
namespace testing {

inline absl::Status StatusOf(const absl::Status& s) { return s; }
template <typename T>
absl::Status StatusOf(const absl::StatusOr<T>& s) {
  return s.status();
}

// gMock container matchers need const_iterator, which std::span lacks.
template <typename T>
std::vector<std::remove_const_t<T>> ToVector(std::span<T> values) {
  return {values.begin(), values.end()};
}

// Fresh, empty directory under the test temp root.
inline std::string FreshTempDir(const std::string& name) {
  const std::filesystem::path dir =
      std::filesystem::path(::testing::TempDir()) / absl::StrCat("textdp_", name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

inline std::string DataPath(const std::string& relative) {
  return (std::filesystem::path(TEXTDP_DATA_DIR) / relative).string();
}

}  // namespace testing
}  // namespace textdp

#endif  // TEXTDP_TESTS_TEST_UTIL_H_

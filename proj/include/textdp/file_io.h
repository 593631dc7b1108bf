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

#ifndef TEXTDP_FILE_IO_H_
#define TEXTDP_FILE_IO_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace textdp {

absl::StatusOr<std::string> ReadFileToString(const std::string& path);

// Writes through a sibling temporary file and renames it into place.
absl::Status WriteStringToFile(const std::string& path, absl::string_view contents);

// Creates `dir` and its parents if needed.
absl::Status EnsureDirectory(const std::string& dir);

}  // namespace textdp

#endif  // TEXTDP_FILE_IO_H_

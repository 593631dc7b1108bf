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

#ifndef TEXTDP_DIGEST_H_
#define TEXTDP_DIGEST_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace textdp {

// Lowercase hex SHA-256 of `data`.
std::string Sha256Hex(absl::string_view data);

// Lowercase hex SHA-256 of the file contents at `path`.
absl::StatusOr<std::string> Sha256File(const std::string& path);

// First eight bytes of SHA-256(data), big-endian. Stable across platforms and
// runs, unlike std::hash.
uint64_t StableHash64(absl::string_view data);

}  // namespace textdp

#endif  // TEXTDP_DIGEST_H_

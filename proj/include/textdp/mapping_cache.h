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

// Versioned text serialization of a mapping table and its scoring table.
//
//   textdp-mapping-cache 1
//   k <K>
//   metric <euclidean|cosine>
//   pivot_order <file|random> <seed>
//   embedding_sha256 <hex or ->
//   tokens <n>
//   <one token per line>
//   sets <m>
//   <space-separated ordinals per line>
//   scores
//   <hex-float scores per line, one line per token ordinal>
//   end
//
// Scores are written as C99 hex floats so a reload is bit-identical.

#ifndef TEXTDP_MAPPING_CACHE_H_
#define TEXTDP_MAPPING_CACHE_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "textdp/mapping.h"
#include "textdp/scoring.h"

namespace textdp {

struct MappingCache {
  MappingTable table;
  ScoringTable scores;
};

// The file name used inside a build-map output directory.
inline constexpr absl::string_view kMappingCacheFileName = "mapping.cache";

std::string SerializeMappingCache(const MappingTable& table,
                                  const ScoringTable& scores);
absl::StatusOr<MappingCache> ParseMappingCache(absl::string_view text);

absl::Status WriteMappingCache(const std::string& path,
                               const MappingTable& table,
                               const ScoringTable& scores);
// `path` may name the cache file or a directory holding mapping.cache.
absl::StatusOr<MappingCache> ReadMappingCache(const std::string& path);

}  // namespace textdp

#endif  // TEXTDP_MAPPING_CACHE_H_

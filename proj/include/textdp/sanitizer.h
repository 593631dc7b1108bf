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

// Selective sanitization: token positions in the sensitive list whose token
// is in the vocabulary are replaced by an exponential-mechanism draw from the
// token's output set; every other position is copied through.

#ifndef TEXTDP_SANITIZER_H_
#define TEXTDP_SANITIZER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "textdp/corpus.h"
#include "textdp/importance.h"
#include "textdp/mapping.h"
#include "textdp/scoring.h"

namespace textdp {

enum class Strategy {
  // Every sensitive occurrence is sampled independently.
  kAggressive,
  // The first draw for a surface form is reused for its later occurrences
  // within the cache scope.
  kConservative,
};

enum class CacheScope { kRecord, kDocument };

enum class SeedingMode {
  // One generator for the whole run, consumed in document order.
  kSequential,
  // Record i gets its own generator seeded with seed ^ i; records may then be
  // processed concurrently. Output differs from kSequential.
  kPerRecord,
};

absl::string_view StrategyName(Strategy strategy);
absl::StatusOr<Strategy> ParseStrategy(absl::string_view name);
absl::string_view CacheScopeName(CacheScope scope);
absl::StatusOr<CacheScope> ParseCacheScope(absl::string_view name);
absl::string_view SeedingModeName(SeedingMode mode);
absl::StatusOr<SeedingMode> ParseSeedingMode(absl::string_view name);

struct SanitizerConfig {
  double epsilon = 3.0;
  Strategy strategy = Strategy::kAggressive;
  CacheScope cache_scope = CacheScope::kRecord;
  SeedingMode seeding = SeedingMode::kSequential;
  uint64_t seed = 0;
  // Worker threads; only used with SeedingMode::kPerRecord.
  int threads = 1;
};

struct SanitizationReport {
  int64_t tokens_total = 0;
  int64_t tokens_in_vocab = 0;
  // Positions selected into the sensitive list.
  int64_t tokens_sensitive = 0;
  // Sensitive positions whose token has no vector; copied through unchanged.
  int64_t tokens_sensitive_oov = 0;
  // Sampled positions whose replacement differs from the original.
  int64_t tokens_perturbed = 0;
  // Sampled positions that drew the original token back.
  int64_t tokens_self_retained = 0;
  // Not sampled: not sensitive, or sensitive but out of vocabulary.
  int64_t tokens_passed_through = 0;

  int64_t sampled() const { return tokens_perturbed + tokens_self_retained; }
  bool Reconciles() const;
  SanitizationReport& operator+=(const SanitizationReport& other);

  friend bool operator==(const SanitizationReport&, const SanitizationReport&) = default;
};

struct SampledPosition {
  // Position in the record's flat token sequence.
  int position = 0;
  std::string original;
  std::string replacement;
};

struct SanitizeResult {
  Document doc;
  SanitizationReport report;
  // Per record, every sampled position in order.
  std::vector<std::vector<SampledPosition>> sampled;
};

absl::StatusOr<SanitizeResult> Sanitize(const Document& doc,
                                        const SanitizerConfig& config,
                                        const MappingTable& table,
                                        const ScoringTable& scores,
                                        const SensitiveList& sensitive);

}  // namespace textdp

#endif  // TEXTDP_SANITIZER_H_

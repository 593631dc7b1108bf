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

// Corpus-level measurement: perturbation sweeps over the selection grid,
// exact privacy audits of built tables, and mask-attack report ingestion.

#ifndef TEXTDP_EVALUATION_H_
#define TEXTDP_EVALUATION_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/container/flat_hash_set.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "textdp/corpus.h"
#include "textdp/importance.h"
#include "textdp/mapping.h"
#include "textdp/sanitizer.h"
#include "textdp/scoring.h"

namespace textdp {

// Outcome of the mask-inference attack run by the external extractor.
//
// File format, either one "key value" pair per line:
//   attempts 200
//   successes 37
// or a single JSON object {"attempts": 200, "successes": 37}. An "rmask" key,
// when present, must agree with successes / attempts. Other keys are ignored.
struct AttackReport {
  int64_t attempts = 0;
  int64_t successes = 0;
  // successes / attempts, or 0 when there were no attempts.
  double rmask = 0.0;
  // 1 - rmask.
  double privacy_score = 1.0;
  // No attack positions.
  bool empty = true;
};

absl::StatusOr<AttackReport> MakeAttackReport(int64_t attempts, int64_t successes);
absl::StatusOr<AttackReport> ParseAttackReport(absl::string_view text);
absl::StatusOr<AttackReport> IngestAttackReport(const std::string& path);

struct AuditOptions {
  // Vocabularies up to this size are audited over every ordered pair inside
  // every output set; larger ones sample pairs.
  int exhaustive_limit = 200;
  int sampled_pairs_per_set = 64;
  uint64_t seed = 0;
};

struct AuditSummary {
  double epsilon = 0.0;
  // e^epsilon.
  double bound = 1.0;
  double max_ratio = 1.0;
  int64_t pairs_checked = 0;
  bool exhaustive = true;
  // Ordinals of the pair attaining max_ratio, or -1 when every set is a
  // singleton.
  int worst_a = -1;
  int worst_b = -1;

  static constexpr double kSlack = 1e-9;
  bool WithinBound() const { return max_ratio <= bound + kSlack; }
};

absl::StatusOr<AuditSummary> AuditTable(const MappingTable& table,
                                        const ScoringTable& scores,
                                        double epsilon,
                                        const AuditOptions& options = {});

struct GridCell {
  double percent = 10.0;
  Selection selection = Selection::kTop;
  Strategy strategy = Strategy::kAggressive;

  // e.g. "percent=20;selection=top;strategy=aggressive".
  std::string Descriptor() const;
  friend bool operator==(const GridCell&, const GridCell&) = default;
};

std::vector<GridCell> MakeGrid(std::span<const double> percents,
                               std::span<const Selection> selections,
                               std::span<const Strategy> strategies);

// master_seed ^ StableHash64(cell.Descriptor()).
uint64_t CellSeed(uint64_t master_seed, const GridCell& cell);

struct SweepOptions {
  double epsilon = 3.0;
  uint64_t seed = 0;
  SelectionScope scope = SelectionScope::kPerRecord;
  CacheScope cache_scope = CacheScope::kRecord;
  absl::flat_hash_set<std::string> stopwords;
  int threads = 1;
};

struct SweepRow {
  GridCell cell;
  uint64_t seed = 0;
  SanitizationReport report;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

// One sequential-seeded sanitization per cell. When `corpora` is non-null it
// receives the sanitized document of each cell, aligned with the rows.
absl::StatusOr<std::vector<SweepRow>> Sweep(
    const Document& doc, std::span<const GridCell> grid,
    const SweepOptions& options, const MappingTable& table,
    const ScoringTable& scores, std::span<const ImportanceRecord> importance,
    std::vector<Document>* corpora = nullptr);

// Comma-separated results with a header line.
std::string SweepToCsv(std::span<const SweepRow> rows);
absl::StatusOr<std::vector<SweepRow>> ParseSweepCsv(absl::string_view text);

}  // namespace textdp

#endif  // TEXTDP_EVALUATION_H_

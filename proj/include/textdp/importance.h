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

// Token importance and sensitive-list selection.
//
// Importance file (JSONL), one record per line:
//   {"record_id": "17", "tokens": ["a", "fine", "film"], "scores": [0.2, 0.5, 0.3]}
// Scores are non-negative and sum to 1 per record. Sentence-pair records put
// kFieldBoundary between the two fields; that position is never selected and
// should carry score 0. An optional boolean "truncated" flags records the
// producer had to cut. Special model tokens ([CLS], [SEP]) must not appear.

#ifndef TEXTDP_IMPORTANCE_H_
#define TEXTDP_IMPORTANCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "textdp/corpus.h"

namespace textdp {

inline constexpr double kImportanceSumTolerance = 1e-6;

struct ImportanceRecord {
  std::string record_id;
  std::vector<std::string> tokens;
  std::vector<double> scores;
  bool truncated = false;

  friend bool operator==(const ImportanceRecord&, const ImportanceRecord&) = default;
};

struct ImportanceFile {
  std::vector<ImportanceRecord> records;
  // Records whose scores did not sum to 1 and were rescaled.
  int renormalized = 0;
};

absl::StatusOr<ImportanceFile> ParseImportance(absl::string_view text);
absl::StatusOr<ImportanceFile> LoadImportance(const std::string& path);
std::string SerializeImportance(std::span<const ImportanceRecord> records);
absl::Status WriteImportance(const std::string& path,
                             std::span<const ImportanceRecord> records);

// Checks that every importance record matches the corpus tokenization of the
// record with the same id. The error names the first offending token.
absl::Status CheckAlignment(const Document& doc,
                            std::span<const ImportanceRecord> records);

enum class Selection { kTop, kBottom };
enum class SelectionScope { kPerRecord, kGlobal };

absl::string_view SelectionName(Selection selection);
absl::StatusOr<Selection> ParseSelection(absl::string_view name);
absl::string_view ScopeName(SelectionScope scope);
absl::StatusOr<SelectionScope> ParseScope(absl::string_view name);

struct SelectionOptions {
  Selection selection = Selection::kTop;
  // In (0, 100].
  double percent = 10.0;
  SelectionScope scope = SelectionScope::kPerRecord;
  // Tokens never eligible for selection.
  absl::flat_hash_set<std::string> stopwords;
};

// ceil(percent * n / 100), robust to the representation error of percent.
int SelectionCount(double percent, int n);

struct RecordSelection {
  std::string record_id;
  // Selected positions in the record's flat token sequence, ascending.
  std::vector<int> positions;
  // Surface forms aligned with `positions`.
  std::vector<std::string> tokens;
};

class SensitiveList {
 public:
  SensitiveList() = default;

  SelectionScope scope() const { return scope_; }
  Selection selection() const { return selection_; }
  double percent() const { return percent_; }

  // Per-record scope.
  const std::vector<RecordSelection>& records() const { return records_; }
  const RecordSelection* ForRecord(absl::string_view record_id) const;

  // Global scope: shared surface forms, in rank order.
  const std::vector<std::string>& global_tokens() const { return global_tokens_; }
  bool ContainsGlobal(absl::string_view token) const {
    return global_set_.contains(token);
  }

  // Selected positions summed over records (per-record scope).
  int64_t total_positions() const;

  static SensitiveList Empty(SelectionScope scope = SelectionScope::kPerRecord);

 private:
  friend absl::StatusOr<SensitiveList> SelectSensitive(
      std::span<const ImportanceRecord>, const SelectionOptions&);

  SelectionScope scope_ = SelectionScope::kPerRecord;
  Selection selection_ = Selection::kTop;
  double percent_ = 0.0;
  std::vector<RecordSelection> records_;
  absl::flat_hash_map<std::string, int> record_index_;
  std::vector<std::string> global_tokens_;
  absl::flat_hash_set<std::string> global_set_;
};

// Ranks eligible positions (not a field boundary, not a stopword) by score.
// "top" orders by descending score with ties to the earlier position; "bottom"
// is exactly the reverse of that order, so top-p and bottom-p never overlap
// while 2 * SelectionCount(p, n) <= n. Each record contributes
// SelectionCount(percent, n) positions, n = its eligible positions.
//
// Global scope ranks distinct surface forms by mean score across all
// occurrences (ties to the earliest first occurrence) and keeps
// SelectionCount(percent, #forms) of them.
absl::StatusOr<SensitiveList> SelectSensitive(
    std::span<const ImportanceRecord> records, const SelectionOptions& options);

// Tab-separated "record_id position token" lines; global scope writes one
// token per line.
std::string ExportSensitiveList(const SensitiveList& list);

// Corpus-level inverse frequency: a token occurring c times in the corpus
// scores 1/c, renormalized per record. Field boundaries score 0.
std::vector<ImportanceRecord> FallbackScores(const Document& doc);

// One word per line; blank lines and lines starting with '#' are skipped.
absl::StatusOr<absl::flat_hash_set<std::string>> LoadStoplist(const std::string& path);

}  // namespace textdp

#endif  // TEXTDP_IMPORTANCE_H_

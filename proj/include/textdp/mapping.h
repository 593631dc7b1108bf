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

// Customized output sets. The vocabulary is partitioned greedily: a pivot
// token claims its K-1 closest unassigned neighbours, the group becomes the
// shared output set of all its members, and the group leaves the pool. Once
// fewer than K tokens remain they form one final, smaller set.

#ifndef TEXTDP_MAPPING_H_
#define TEXTDP_MAPPING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "textdp/embeddings.h"

namespace textdp {

enum class PivotOrder {
  // Vocabulary (file) order; frequency order for conventional files.
  kFileOrder,
  // A seeded permutation of the vocabulary.
  kSeededRandom,
};

struct PivotPolicy {
  PivotOrder order = PivotOrder::kFileOrder;
  uint64_t seed = 0;

  friend bool operator==(const PivotPolicy&, const PivotPolicy&) = default;
};

absl::string_view PivotOrderName(PivotOrder order);
absl::StatusOr<PivotOrder> ParsePivotOrder(absl::string_view name);

// The sequence in which tokens are considered as pivots.
std::vector<int> PivotSequence(int vocab_size, const PivotPolicy& policy);

struct MappingBuildReport {
  int full_sets = 0;
  // Size of the final short set; 0 when |V| is a multiple of K.
  int remainder_size = 0;
  // A remainder of one token always maps to itself and gets no protection.
  bool singleton_remainder = false;
};

class MappingTable {
 public:
  // Validates the partition invariants. `sets` must list every ordinal of
  // `vocab` exactly once; all sets have size `k` except possibly the last,
  // which is shorter.
  static absl::StatusOr<MappingTable> FromSets(Vocabulary vocab, int k,
                                               Metric metric,
                                               PivotPolicy pivot,
                                               std::vector<std::vector<int>> sets);

  const Vocabulary& vocab() const { return vocab_; }
  int k() const { return k_; }
  Metric metric() const { return metric_; }
  const PivotPolicy& pivot() const { return pivot_; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  const MappingBuildReport& report() const { return report_; }

  int set_of(int ordinal) const { return set_of_[ordinal]; }
  // Output set of a token, pivot first and then by decreasing closeness to
  // the pivot.
  std::span<const int> OutputSetOf(int ordinal) const {
    return sets_[set_of_[ordinal]];
  }
  // Position of `ordinal` inside its own output set.
  int PositionInSet(int ordinal) const { return position_in_set_[ordinal]; }

  // Surface forms of the token's output set, or nullopt when the token is not
  // in the vocabulary (callers pass such tokens through).
  std::optional<std::vector<std::string>> OutputSet(absl::string_view token) const;

  // SHA-256 of the embedding file the table was built from; empty when built
  // from in-memory vectors.
  const std::string& source_digest() const { return source_digest_; }
  void set_source_digest(std::string digest) { source_digest_ = std::move(digest); }

  friend bool operator==(const MappingTable& a, const MappingTable& b) {
    return a.vocab_ == b.vocab_ && a.k_ == b.k_ && a.metric_ == b.metric_ &&
           a.pivot_ == b.pivot_ && a.sets_ == b.sets_ &&
           a.source_digest_ == b.source_digest_;
  }

 private:
  MappingTable() = default;

  Vocabulary vocab_;
  int k_ = 1;
  Metric metric_ = Metric::kEuclidean;
  PivotPolicy pivot_;
  std::vector<std::vector<int>> sets_;
  std::vector<int> set_of_;
  std::vector<int> position_in_set_;
  MappingBuildReport report_;
  std::string source_digest_;
};

// Exact full-scan construction. Requires 1 <= k <= |vocab| and one embedding
// row per vocabulary token. Closeness ties break toward the lower ordinal.
absl::StatusOr<MappingTable> BuildMapping(const Vocabulary& vocab,
                                          const EmbeddingMatrix& embeddings,
                                          int k, Metric metric,
                                          const PivotPolicy& pivot = {});

}  // namespace textdp

#endif  // TEXTDP_MAPPING_H_

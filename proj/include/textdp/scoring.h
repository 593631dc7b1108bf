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

#ifndef TEXTDP_SCORING_H_
#define TEXTDP_SCORING_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "textdp/embeddings.h"
#include "textdp/mapping.h"

namespace textdp {

// Per-token utility scores u(x, .) over the token's output set, min-max
// normalized into [0, 1] so that the sensitivity is bounded by 1.
class ScoringTable {
 public:
  // The sampler always uses this bound, never the measured sensitivity.
  static constexpr double kDeltaU = 1.0;

  // `rows[x]` must align with `table.OutputSetOf(x)`; values must be finite
  // and inside [0, 1].
  static absl::StatusOr<ScoringTable> FromRows(const MappingTable& table,
                                               std::vector<std::vector<double>> rows);

  Metric metric() const { return metric_; }
  int size() const { return static_cast<int>(rows_.size()); }
  std::span<const double> row(int ordinal) const { return rows_[ordinal]; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

  friend bool operator==(const ScoringTable&, const ScoringTable&) = default;

 private:
  ScoringTable() = default;

  Metric metric_ = Metric::kEuclidean;
  std::vector<std::vector<double>> rows_;
};

// raw(x, y) is cosine(x, y) or -euclidean(x, y) per the table's metric,
// capped at raw(x, x) so that u(x, x) = 1 exactly;
// u = (raw - min) / (max - min) per row, and rows with max == min are all 1.
absl::StatusOr<ScoringTable> BuildScores(const MappingTable& table,
                                         const EmbeddingMatrix& embeddings);

// max over y, and over x, x' sharing y's output set, of |u(x, y) - u(x', y)|.
double Sensitivity(const MappingTable& table, const ScoringTable& scores);

}  // namespace textdp

#endif  // TEXTDP_SCORING_H_

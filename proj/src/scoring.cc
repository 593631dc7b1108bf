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

#include "textdp/scoring.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace textdp {

absl::StatusOr<ScoringTable> ScoringTable::FromRows(
    const MappingTable& table, std::vector<std::vector<double>> rows) {
  if (static_cast<int>(rows.size()) != table.vocab().size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "scoring table has ", rows.size(), " rows for a vocabulary of ",
        table.vocab().size()));
  }
  for (int x = 0; x < static_cast<int>(rows.size()); ++x) {
    if (rows[x].size() != table.OutputSetOf(x).size()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "row for '", table.vocab().token(x), "' has ", rows[x].size(),
          " scores but its output set has ", table.OutputSetOf(x).size()));
    }
    for (double u : rows[x]) {
      if (!std::isfinite(u) || u < 0.0 || u > 1.0) {
        return absl::InvalidArgumentError(absl::StrCat(
            "score ", u, " for '", table.vocab().token(x), "' is outside [0, 1]"));
      }
    }
  }
  ScoringTable scores;
  scores.metric_ = table.metric();
  scores.rows_ = std::move(rows);
  return scores;
}

absl::StatusOr<ScoringTable> BuildScores(const MappingTable& table,
                                         const EmbeddingMatrix& embeddings) {
  const int n = table.vocab().size();
  if (embeddings.rows() != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "mapping table covers ", n, " tokens but the matrix has ",
        embeddings.rows(), " rows"));
  }
  const Metric metric = table.metric();
  std::vector<std::vector<double>> rows(n);
  for (int x = 0; x < n; ++x) {
    const std::span<const int> set = table.OutputSetOf(x);
    // Closeness to itself is the row's ceiling; capping removes rounding
    // noise (a duplicate vector can land a hair above or below it).
    const double self_raw = Closeness(metric, embeddings.row(x), embeddings.row(x));
    std::vector<double> raw(set.size());
    for (size_t j = 0; j < set.size(); ++j) {
      raw[j] = std::min(self_raw, Closeness(metric, embeddings.row(x),
                                            embeddings.row(set[j])));
    }
    const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
    const double min = *lo, max = *hi;
    std::vector<double>& row = rows[x];
    row.resize(set.size());
    for (size_t j = 0; j < set.size(); ++j) {
      row[j] = max == min ? 1.0 : (raw[j] - min) / (max - min);
    }
  }
  return ScoringTable::FromRows(table, std::move(rows));
}

double Sensitivity(const MappingTable& table, const ScoringTable& scores) {
  double worst = 0.0;
  for (const std::vector<int>& set : table.sets()) {
    // Every member's row is aligned with the same ordering, so column j is the
    // same output token for all of them.
    for (size_t j = 0; j < set.size(); ++j) {
      double lo = 1.0, hi = 0.0;
      for (int x : set) {
        const double u = scores.row(x)[j];
        lo = std::min(lo, u);
        hi = std::max(hi, u);
      }
      worst = std::max(worst, hi - lo);
    }
  }
  return worst;
}

}  // namespace textdp

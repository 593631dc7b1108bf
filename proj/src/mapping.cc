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

#include "textdp/mapping.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"
#include "textdp/status_macros.h"

namespace textdp {
namespace {

// Unbiased draw in [0, bound) by rejection; std::uniform_int_distribution is
// not reproducible across standard libraries.
uint64_t BoundedDraw(std::mt19937_64& gen, uint64_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t value;
  do {
    value = gen();
  } while (value >= limit);
  return value % bound;
}

struct Candidate {
  double closeness;
  int ordinal;
};

bool Closer(const Candidate& a, const Candidate& b) {
  if (a.closeness != b.closeness) return a.closeness > b.closeness;
  return a.ordinal < b.ordinal;
}

}  // namespace

absl::string_view PivotOrderName(PivotOrder order) {
  return order == PivotOrder::kFileOrder ? "file" : "random";
}

absl::StatusOr<PivotOrder> ParsePivotOrder(absl::string_view name) {
  if (name == "file") return PivotOrder::kFileOrder;
  if (name == "random") return PivotOrder::kSeededRandom;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown pivot order '", name, "'; expected file|random"));
}

std::vector<int> PivotSequence(int vocab_size, const PivotPolicy& policy) {
  std::vector<int> order(vocab_size);
  std::iota(order.begin(), order.end(), 0);
  if (policy.order == PivotOrder::kSeededRandom) {
    std::mt19937_64 gen(policy.seed);
    for (int i = vocab_size - 1; i > 0; --i) {
      const int j = static_cast<int>(BoundedDraw(gen, static_cast<uint64_t>(i) + 1));
      std::swap(order[i], order[j]);
    }
  }
  return order;
}

absl::StatusOr<MappingTable> MappingTable::FromSets(
    Vocabulary vocab, int k, Metric metric, PivotPolicy pivot,
    std::vector<std::vector<int>> sets) {
  const int n = vocab.size();
  if (k < 1 || k > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("K must lie in [1, ", n, "], got ", k));
  }
  MappingTable table;
  table.set_of_.assign(n, -1);
  table.position_in_set_.assign(n, -1);
  for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
    const int size = static_cast<int>(sets[s].size());
    const bool last = s + 1 == static_cast<int>(sets.size());
    if (size == 0 || size > k || (size < k && !last)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "set ", s, " has size ", size, "; only the last set may be short of K=", k));
    }
    for (int p = 0; p < size; ++p) {
      const int ordinal = sets[s][p];
      if (ordinal < 0 || ordinal >= n) {
        return absl::InvalidArgumentError(
            absl::StrCat("set ", s, " references ordinal ", ordinal));
      }
      if (table.set_of_[ordinal] != -1) {
        return absl::InvalidArgumentError(
            absl::StrCat("token '", vocab.token(ordinal), "' is in two sets"));
      }
      table.set_of_[ordinal] = s;
      table.position_in_set_[ordinal] = p;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (table.set_of_[i] == -1) {
      return absl::InvalidArgumentError(
          absl::StrCat("token '", vocab.token(i), "' is not in any set"));
    }
  }
  const int tail = sets.empty() ? 0 : static_cast<int>(sets.back().size());
  table.report_.remainder_size = tail < k ? tail : 0;
  table.report_.full_sets =
      static_cast<int>(sets.size()) - (table.report_.remainder_size > 0 ? 1 : 0);
  table.report_.singleton_remainder = table.report_.remainder_size == 1;
  table.vocab_ = std::move(vocab);
  table.k_ = k;
  table.metric_ = metric;
  table.pivot_ = pivot;
  table.sets_ = std::move(sets);
  return table;
}

std::optional<std::vector<std::string>> MappingTable::OutputSet(
    absl::string_view token) const {
  std::optional<int> ordinal = vocab_.Find(token);
  if (!ordinal.has_value()) return std::nullopt;
  std::vector<std::string> out;
  for (int member : OutputSetOf(*ordinal)) out.push_back(vocab_.token(member));
  return out;
}

absl::StatusOr<MappingTable> BuildMapping(const Vocabulary& vocab,
                                          const EmbeddingMatrix& embeddings,
                                          int k, Metric metric,
                                          const PivotPolicy& pivot) {
  const int n = vocab.size();
  if (k < 1 || k > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("K must lie in [1, |V|=", n, "], got ", k));
  }
  if (embeddings.rows() != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "vocabulary has ", n, " tokens but the matrix has ", embeddings.rows(),
        " rows"));
  }

  // Unassigned ordinals in ascending order.
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<char> assigned(n, 0);
  std::vector<std::vector<int>> sets;
  sets.reserve(n / k + 1);
  std::vector<Candidate> candidates;
  candidates.reserve(n);

  for (int x : PivotSequence(n, pivot)) {
    if (pool.empty()) break;
    if (assigned[x]) continue;
    // While at least K tokens remain the set has K members; afterwards the
    // remainder forms one set with K' = |pool|.
    const int set_size = std::min<int>(k, static_cast<int>(pool.size()));
    const std::span<const double> pivot_vec = embeddings.row(x);
    candidates.clear();
    for (int y : pool) {
      if (y == x) continue;
      candidates.push_back({Closeness(metric, pivot_vec, embeddings.row(y)), y});
    }
    const auto cut = candidates.begin() + (set_size - 1);
    std::partial_sort(candidates.begin(), cut, candidates.end(), Closer);

    std::vector<int> members;
    members.reserve(set_size);
    members.push_back(x);
    for (auto it = candidates.begin(); it != cut; ++it) members.push_back(it->ordinal);
    for (int m : members) assigned[m] = 1;
    std::erase_if(pool, [&](int y) { return assigned[y] != 0; });
    sets.push_back(std::move(members));
  }
  return MappingTable::FromSets(vocab, k, metric, pivot, std::move(sets));
}

}  // namespace textdp

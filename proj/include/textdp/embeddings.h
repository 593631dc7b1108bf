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

// Token vocabularies, word-vector files and the two similarity measures used
// to relate tokens.

#ifndef TEXTDP_EMBEDDINGS_H_
#define TEXTDP_EMBEDDINGS_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace textdp {

// Euclidean distance correlates negatively with semantic proximity, cosine
// similarity positively.
enum class Metric { kEuclidean, kCosine };

absl::string_view MetricName(Metric metric);
absl::StatusOr<Metric> ParseMetric(absl::string_view name);

// Ordered set of unique tokens. Ordinals are positions in `tokens()`.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Fails on duplicate tokens. Tokens are stored as given.
  static absl::StatusOr<Vocabulary> FromTokens(std::vector<std::string> tokens);

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string& token(int ordinal) const { return tokens_[ordinal]; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::optional<int> Find(absl::string_view token) const;
  bool Contains(absl::string_view token) const { return Find(token).has_value(); }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  absl::flat_hash_map<std::string, int> index_;
};

// Dense row-major matrix with one vector per vocabulary ordinal.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(int dim, std::vector<double> values);

  int dim() const { return dim_; }
  int rows() const { return dim_ == 0 ? 0 : static_cast<int>(values_.size()) / dim_; }
  std::span<const double> row(int ordinal) const {
    return std::span<const double>(values_).subspan(
        static_cast<size_t>(ordinal) * dim_, dim_);
  }

  friend bool operator==(const EmbeddingMatrix&, const EmbeddingMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<double> values_;
};

struct LoadOptions {
  // Keep only the first `limit` unique tokens of the file.
  std::optional<int> limit;
  // Set when the cosine metric will be used; zero vectors have no direction.
  bool reject_zero_norm = false;
};

struct LoadedEmbeddings {
  Vocabulary vocab;
  EmbeddingMatrix matrix;
  bool header_skipped = false;
  // Later occurrences of an already-seen (lowercased) token.
  int duplicates_skipped = 0;
};

// Reads a whitespace-separated word-vector file ("token v1 ... vdim" per
// line, optional "count dim" header). Tokens are ASCII-lowercased and the
// first occurrence of a token wins.
absl::StatusOr<LoadedEmbeddings> LoadEmbeddings(const std::string& path,
                                                const LoadOptions& options = {});
absl::StatusOr<LoadedEmbeddings> ParseEmbeddings(std::istream& in,
                                                 const LoadOptions& options = {});

// Euclidean distance, or cosine similarity, between two vectors.
absl::StatusOr<double> Distance(Metric metric, std::span<const double> a,
                                std::span<const double> b);

// Unchecked variant used on hot paths: larger means semantically closer.
// Returns cosine similarity or the negated Euclidean distance.
double Closeness(Metric metric, std::span<const double> a,
                 std::span<const double> b);

double EuclideanDistance(std::span<const double> a, std::span<const double> b);
double CosineSimilarity(std::span<const double> a, std::span<const double> b);

}  // namespace textdp

#endif  // TEXTDP_EMBEDDINGS_H_

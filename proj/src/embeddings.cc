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

#include "textdp/embeddings.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"

namespace textdp {
namespace {

bool IsInteger(absl::string_view field) {
  int64_t value;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  return ec == std::errc() && ptr == field.data() + field.size();
}

absl::StatusOr<double> ParseFinite(absl::string_view field, int line_number) {
  double value;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "line ", line_number, ": cannot parse '", field, "' as a finite float"));
  }
  return value;
}

}  // namespace

absl::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kEuclidean:
      return "euclidean";
    case Metric::kCosine:
      return "cosine";
  }
  return "unknown";
}

absl::StatusOr<Metric> ParseMetric(absl::string_view name) {
  if (name == "euclidean") return Metric::kEuclidean;
  if (name == "cosine") return Metric::kCosine;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown metric '", name, "'; expected euclidean|cosine"));
}

absl::StatusOr<Vocabulary> Vocabulary::FromTokens(
    std::vector<std::string> tokens) {
  Vocabulary vocab;
  vocab.index_.reserve(tokens.size());
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    if (!vocab.index_.emplace(tokens[i], i).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate vocabulary token '", tokens[i], "'"));
    }
  }
  vocab.tokens_ = std::move(tokens);
  return vocab;
}

std::optional<int> Vocabulary::Find(absl::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EmbeddingMatrix::EmbeddingMatrix(int dim, std::vector<double> values)
    : dim_(dim), values_(std::move(values)) {}

absl::StatusOr<LoadedEmbeddings> ParseEmbeddings(std::istream& in,
                                                 const LoadOptions& options) {
  if (options.limit.has_value() && *options.limit < 0) {
    return absl::InvalidArgumentError("limit must be non-negative");
  }
  LoadedEmbeddings out;
  std::vector<std::string> tokens;
  absl::flat_hash_map<std::string, int> seen;
  std::vector<double> values;
  int dim = 0;
  int line_number = 0;
  bool any_data_line = false;
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    std::vector<absl::string_view> fields =
        absl::StrSplit(line, absl::ByAnyChar(" \t\r"), absl::SkipEmpty());
    if (fields.empty()) continue;
    if (!any_data_line && !out.header_skipped && fields.size() == 2 &&
        IsInteger(fields[0]) && IsInteger(fields[1])) {
      out.header_skipped = true;
      continue;
    }
    if (fields.size() < 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": expected a token and a vector"));
    }
    const int line_dim = static_cast<int>(fields.size()) - 1;
    if (!any_data_line) {
      dim = line_dim;
      any_data_line = true;
    } else if (line_dim != dim) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_number, ": dimension ", line_dim, " differs from ", dim));
    }
    if (options.limit.has_value() &&
        static_cast<int>(tokens.size()) >= *options.limit) {
      break;
    }
    std::vector<double> vec(dim);
    for (int i = 0; i < dim; ++i) {
      auto parsed = ParseFinite(fields[i + 1], line_number);
      if (!parsed.ok()) return parsed.status();
      vec[i] = *parsed;
    }
    std::string token = absl::AsciiStrToLower(fields[0]);
    if (seen.contains(token)) {
      ++out.duplicates_skipped;
      continue;
    }
    if (options.reject_zero_norm &&
        std::all_of(vec.begin(), vec.end(), [](double v) { return v == 0.0; })) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_number, ": zero vector for '", token,
          "' is undefined under the cosine metric"));
    }
    seen.emplace(token, static_cast<int>(tokens.size()));
    tokens.push_back(std::move(token));
    values.insert(values.end(), vec.begin(), vec.end());
  }
  if (!any_data_line) {
    return absl::InvalidArgumentError("embedding file has no vectors");
  }
  auto vocab = Vocabulary::FromTokens(std::move(tokens));
  if (!vocab.ok()) return vocab.status();
  out.vocab = *std::move(vocab);
  out.matrix = EmbeddingMatrix(dim, std::move(values));
  return out;
}

absl::StatusOr<LoadedEmbeddings> LoadEmbeddings(const std::string& path,
                                                const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return ParseEmbeddings(in, options);
}

double EuclideanDistance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double CosineSimilarity(std::span<const double> a, std::span<const double> b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

double Closeness(Metric metric, std::span<const double> a,
                 std::span<const double> b) {
  return metric == Metric::kCosine ? CosineSimilarity(a, b)
                                   : -EuclideanDistance(a, b);
}

absl::StatusOr<double> Distance(Metric metric, std::span<const double> a,
                                std::span<const double> b) {
  if (a.size() != b.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "dimension mismatch: ", a.size(), " vs ", b.size()));
  }
  if (metric == Metric::kEuclidean) return EuclideanDistance(a, b);
  auto zero = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
  };
  if (zero(a) || zero(b)) {
    return absl::InvalidArgumentError("cosine of a zero-norm vector");
  }
  return CosineSimilarity(a, b);
}

}  // namespace textdp

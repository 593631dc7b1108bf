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

#include "textdp/mapping_cache.h"

#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <utility>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "textdp/file_io.h"
#include "textdp/status_macros.h"

namespace textdp {
namespace {

constexpr absl::string_view kMagic = "textdp-mapping-cache";
constexpr int kVersion = 1;

class LineCursor {
 public:
  explicit LineCursor(absl::string_view text)
      : lines_(absl::StrSplit(text, '\n')) {}

  absl::StatusOr<absl::string_view> Next() {
    if (pos_ >= lines_.size()) {
      return absl::InvalidArgumentError("mapping cache is truncated");
    }
    return lines_[pos_++];
  }

  // Reads "<key> <fields...>" and returns the fields.
  absl::StatusOr<std::vector<absl::string_view>> Keyed(absl::string_view key) {
    ASSIGN_OR_RETURN(absl::string_view line, Next());
    std::vector<absl::string_view> fields = absl::StrSplit(line, ' ');
    if (fields.empty() || fields[0] != key) {
      return absl::InvalidArgumentError(absl::StrCat(
          "mapping cache line ", pos_, ": expected '", key, "', got '", line, "'"));
    }
    fields.erase(fields.begin());
    return fields;
  }

  size_t line_number() const { return pos_; }

 private:
  std::vector<absl::string_view> lines_;
  size_t pos_ = 0;
};

absl::StatusOr<int> ParseCount(const std::vector<absl::string_view>& fields,
                               absl::string_view key) {
  int value;
  if (fields.size() != 1 || !absl::SimpleAtoi(fields[0], &value) || value < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("mapping cache: bad value for '", key, "'"));
  }
  return value;
}

absl::StatusOr<double> ParseHexFloat(absl::string_view field) {
  const std::string copy(field);
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size() || errno == ERANGE) {
    return absl::InvalidArgumentError(
        absl::StrCat("mapping cache: bad score '", field, "'"));
  }
  return value;
}

}  // namespace

std::string SerializeMappingCache(const MappingTable& table,
                                  const ScoringTable& scores) {
  std::string out;
  absl::StrAppend(&out, kMagic, " ", kVersion, "\n");
  absl::StrAppend(&out, "k ", table.k(), "\n");
  absl::StrAppend(&out, "metric ", MetricName(table.metric()), "\n");
  absl::StrAppend(&out, "pivot_order ", PivotOrderName(table.pivot().order),
                  " ", table.pivot().seed, "\n");
  absl::StrAppend(&out, "embedding_sha256 ",
                  table.source_digest().empty() ? "-" : table.source_digest(),
                  "\n");
  absl::StrAppend(&out, "tokens ", table.vocab().size(), "\n");
  for (const std::string& token : table.vocab().tokens()) {
    absl::StrAppend(&out, token, "\n");
  }
  absl::StrAppend(&out, "sets ", table.sets().size(), "\n");
  for (const std::vector<int>& set : table.sets()) {
    absl::StrAppend(&out, absl::StrJoin(set, " "), "\n");
  }
  absl::StrAppend(&out, "scores\n");
  for (int x = 0; x < scores.size(); ++x) {
    bool first = true;
    for (double u : scores.row(x)) {
      absl::StrAppend(&out, first ? "" : " ", absl::StrFormat("%a", u));
      first = false;
    }
    absl::StrAppend(&out, "\n");
  }
  absl::StrAppend(&out, "end\n");
  return out;
}

absl::StatusOr<MappingCache> ParseMappingCache(absl::string_view text) {
  LineCursor cursor(text);
  ASSIGN_OR_RETURN(std::vector<absl::string_view> magic, cursor.Keyed(kMagic));
  int version;
  if (magic.size() != 1 || !absl::SimpleAtoi(magic[0], &version) ||
      version != kVersion) {
    return absl::InvalidArgumentError("unsupported mapping cache version");
  }
  ASSIGN_OR_RETURN(std::vector<absl::string_view> k_fields, cursor.Keyed("k"));
  ASSIGN_OR_RETURN(int k, ParseCount(k_fields, "k"));
  ASSIGN_OR_RETURN(std::vector<absl::string_view> metric_fields,
                   cursor.Keyed("metric"));
  if (metric_fields.size() != 1) {
    return absl::InvalidArgumentError("mapping cache: bad metric line");
  }
  ASSIGN_OR_RETURN(Metric metric, ParseMetric(metric_fields[0]));
  ASSIGN_OR_RETURN(std::vector<absl::string_view> pivot_fields,
                   cursor.Keyed("pivot_order"));
  PivotPolicy pivot;
  if (pivot_fields.size() != 2 || !absl::SimpleAtoi(pivot_fields[1], &pivot.seed)) {
    return absl::InvalidArgumentError("mapping cache: bad pivot_order line");
  }
  ASSIGN_OR_RETURN(pivot.order, ParsePivotOrder(pivot_fields[0]));
  ASSIGN_OR_RETURN(std::vector<absl::string_view> digest_fields,
                   cursor.Keyed("embedding_sha256"));
  if (digest_fields.size() != 1) {
    return absl::InvalidArgumentError("mapping cache: bad digest line");
  }
  const std::string digest =
      digest_fields[0] == "-" ? std::string() : std::string(digest_fields[0]);

  ASSIGN_OR_RETURN(std::vector<absl::string_view> token_fields,
                   cursor.Keyed("tokens"));
  ASSIGN_OR_RETURN(int n, ParseCount(token_fields, "tokens"));
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (int i = 0; i < n; ++i) {
    ASSIGN_OR_RETURN(absl::string_view token, cursor.Next());
    tokens.emplace_back(token);
  }
  ASSIGN_OR_RETURN(Vocabulary vocab, Vocabulary::FromTokens(std::move(tokens)));

  ASSIGN_OR_RETURN(std::vector<absl::string_view> set_fields,
                   cursor.Keyed("sets"));
  ASSIGN_OR_RETURN(int num_sets, ParseCount(set_fields, "sets"));
  std::vector<std::vector<int>> sets(num_sets);
  for (int s = 0; s < num_sets; ++s) {
    ASSIGN_OR_RETURN(absl::string_view line, cursor.Next());
    for (absl::string_view field : absl::StrSplit(line, ' ')) {
      int ordinal;
      if (!absl::SimpleAtoi(field, &ordinal)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "mapping cache line ", cursor.line_number(), ": bad ordinal"));
      }
      sets[s].push_back(ordinal);
    }
  }
  ASSIGN_OR_RETURN(MappingTable table,
                   MappingTable::FromSets(std::move(vocab), k, metric, pivot,
                                          std::move(sets)));
  table.set_source_digest(digest);

  RETURN_IF_ERROR(cursor.Keyed("scores").status());
  std::vector<std::vector<double>> rows(n);
  for (int x = 0; x < n; ++x) {
    ASSIGN_OR_RETURN(absl::string_view line, cursor.Next());
    for (absl::string_view field : absl::StrSplit(line, ' ')) {
      ASSIGN_OR_RETURN(double u, ParseHexFloat(field));
      rows[x].push_back(u);
    }
  }
  RETURN_IF_ERROR(cursor.Keyed("end").status());
  ASSIGN_OR_RETURN(ScoringTable scores,
                   ScoringTable::FromRows(table, std::move(rows)));
  return MappingCache{std::move(table), std::move(scores)};
}

absl::Status WriteMappingCache(const std::string& path,
                               const MappingTable& table,
                               const ScoringTable& scores) {
  return WriteStringToFile(path, SerializeMappingCache(table, scores));
}

absl::StatusOr<MappingCache> ReadMappingCache(const std::string& path) {
  std::string file = path;
  if (std::filesystem::is_directory(path)) {
    file = (std::filesystem::path(path) / std::string(kMappingCacheFileName)).string();
  }
  ASSIGN_OR_RETURN(std::string text, ReadFileToString(file));
  return ParseMappingCache(text);
}

}  // namespace textdp

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

#include "textdp/importance.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "textdp/file_io.h"
#include "textdp/status_macros.h"

namespace textdp {
namespace {

using Json = nlohmann::ordered_json;

bool IsSpecialModelToken(absl::string_view token) {
  return token == "[CLS]" || token == "[SEP]";
}

absl::Status LineError(int line, absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", message));
}

absl::StatusOr<ImportanceRecord> ParseRecord(absl::string_view line,
                                             int line_number) {
  Json object = Json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (object.is_discarded() || !object.is_object()) {
    return LineError(line_number, "not a JSON object");
  }
  if (!object.contains("record_id") || !object.contains("tokens") ||
      !object.contains("scores")) {
    return LineError(line_number, "record needs record_id, tokens and scores");
  }
  const Json& id = object["record_id"];
  const Json& tokens = object["tokens"];
  const Json& scores = object["scores"];
  if (!(id.is_string() || id.is_number_integer()) || !tokens.is_array() ||
      !scores.is_array()) {
    return LineError(line_number, "malformed record fields");
  }
  ImportanceRecord record;
  record.record_id = id.is_string() ? id.get<std::string>() : id.dump();
  for (const Json& t : tokens) {
    if (!t.is_string()) return LineError(line_number, "token is not a string");
    record.tokens.push_back(t.get<std::string>());
    if (IsSpecialModelToken(record.tokens.back())) {
      return LineError(line_number, absl::StrCat("special token ",
                                                 record.tokens.back(),
                                                 " must be removed"));
    }
  }
  for (const Json& s : scores) {
    if (!s.is_number()) return LineError(line_number, "score is not a number");
    const double value = s.get<double>();
    if (!std::isfinite(value) || value < 0.0) {
      return LineError(line_number, "scores must be finite and non-negative");
    }
    record.scores.push_back(value);
  }
  if (record.tokens.size() != record.scores.size()) {
    return LineError(line_number,
                     absl::StrCat(record.tokens.size(), " tokens but ",
                                  record.scores.size(), " scores"));
  }
  if (object.contains("truncated")) {
    if (!object["truncated"].is_boolean()) {
      return LineError(line_number, "'truncated' must be a boolean");
    }
    record.truncated = object["truncated"].get<bool>();
  }
  return record;
}

bool HasWordToken(const ImportanceRecord& record) {
  return std::any_of(record.tokens.begin(), record.tokens.end(),
                     [](const std::string& t) { return t != kFieldBoundary; });
}

// Top ranking: descending score, ties to the earlier index.
std::vector<int> TopOrder(std::span<const int> candidates,
                          std::span<const double> keys) {
  std::vector<int> order(candidates.begin(), candidates.end());
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return keys[a] > keys[b];
  });
  return order;
}

}  // namespace

absl::StatusOr<ImportanceFile> ParseImportance(absl::string_view text) {
  ImportanceFile file;
  absl::flat_hash_set<std::string> ids;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    ASSIGN_OR_RETURN(ImportanceRecord record, ParseRecord(line, line_number));
    if (!ids.insert(record.record_id).second) {
      return LineError(line_number,
                       absl::StrCat("duplicate record_id '", record.record_id, "'"));
    }
    const double sum =
        std::accumulate(record.scores.begin(), record.scores.end(), 0.0);
    if (!HasWordToken(record)) {
      if (sum != 0.0) {
        return LineError(line_number, "record without words has nonzero scores");
      }
    } else if (std::abs(sum - 1.0) > kImportanceSumTolerance) {
      if (sum <= 0.0) {
        return LineError(line_number, "all-zero scores cannot be renormalized");
      }
      for (double& s : record.scores) s /= sum;
      ++file.renormalized;
    }
    file.records.push_back(std::move(record));
  }
  return file;
}

absl::StatusOr<ImportanceFile> LoadImportance(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFileToString(path));
  return ParseImportance(text);
}

std::string SerializeImportance(std::span<const ImportanceRecord> records) {
  std::string out;
  for (const ImportanceRecord& record : records) {
    Json object;
    object["record_id"] = record.record_id;
    object["tokens"] = record.tokens;
    object["scores"] = record.scores;
    if (record.truncated) object["truncated"] = true;
    absl::StrAppend(&out, object.dump(), "\n");
  }
  return out;
}

absl::Status WriteImportance(const std::string& path,
                             std::span<const ImportanceRecord> records) {
  return WriteStringToFile(path, SerializeImportance(records));
}

absl::Status CheckAlignment(const Document& doc,
                            std::span<const ImportanceRecord> records) {
  absl::flat_hash_map<std::string, const Record*> by_id;
  for (const Record& record : doc.records) by_id.emplace(record.record_id, &record);
  for (const ImportanceRecord& imp : records) {
    auto it = by_id.find(imp.record_id);
    if (it == by_id.end()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "importance record '", imp.record_id, "' is not in the corpus"));
    }
    const RecordTokens tokens = TokenizeRecord(*it->second);
    const size_t common = std::min(tokens.flat.size(), imp.tokens.size());
    for (size_t i = 0; i < common; ++i) {
      if (tokens.flat[i] != imp.tokens[i]) {
        return absl::InvalidArgumentError(absl::StrCat(
            "record '", imp.record_id, "' position ", i, ": importance token '",
            imp.tokens[i], "' does not match corpus token '", tokens.flat[i], "'"));
      }
    }
    if (tokens.flat.size() != imp.tokens.size()) {
      const std::string& offending = imp.tokens.size() > common
                                         ? imp.tokens[common]
                                         : tokens.flat[common];
      return absl::InvalidArgumentError(absl::StrCat(
          "record '", imp.record_id, "' has ", imp.tokens.size(),
          " importance tokens but ", tokens.flat.size(),
          " corpus tokens; first unmatched token '", offending, "'"));
    }
  }
  return absl::OkStatus();
}

absl::string_view SelectionName(Selection selection) {
  return selection == Selection::kTop ? "top" : "bottom";
}

absl::StatusOr<Selection> ParseSelection(absl::string_view name) {
  if (name == "top") return Selection::kTop;
  if (name == "bottom") return Selection::kBottom;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown selection '", name, "'; expected top|bottom"));
}

absl::string_view ScopeName(SelectionScope scope) {
  return scope == SelectionScope::kPerRecord ? "record" : "global";
}

absl::StatusOr<SelectionScope> ParseScope(absl::string_view name) {
  if (name == "record") return SelectionScope::kPerRecord;
  if (name == "global") return SelectionScope::kGlobal;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown scope '", name, "'; expected record|global"));
}

int SelectionCount(double percent, int n) {
  const double exact = percent * n / 100.0;
  const double nearest = std::round(exact);
  if (std::abs(exact - nearest) < 1e-9) return static_cast<int>(nearest);
  return std::min(n, static_cast<int>(std::ceil(exact)));
}

const RecordSelection* SensitiveList::ForRecord(absl::string_view record_id) const {
  auto it = record_index_.find(record_id);
  return it == record_index_.end() ? nullptr : &records_[it->second];
}

int64_t SensitiveList::total_positions() const {
  int64_t total = 0;
  for (const RecordSelection& r : records_) total += r.positions.size();
  return total;
}

SensitiveList SensitiveList::Empty(SelectionScope scope) {
  SensitiveList list;
  list.scope_ = scope;
  return list;
}

absl::StatusOr<SensitiveList> SelectSensitive(
    std::span<const ImportanceRecord> records, const SelectionOptions& options) {
  if (!(options.percent > 0.0 && options.percent <= 100.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("percent must lie in (0, 100], got ", options.percent));
  }
  SensitiveList list;
  list.scope_ = options.scope;
  list.selection_ = options.selection;
  list.percent_ = options.percent;
  auto eligible = [&](const std::string& token) {
    return token != kFieldBoundary && !options.stopwords.contains(token);
  };

  if (options.scope == SelectionScope::kPerRecord) {
    for (const ImportanceRecord& record : records) {
      if (record.tokens.size() != record.scores.size()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "record '", record.record_id, "' has mismatched tokens and scores"));
      }
      std::vector<int> candidates;
      for (int i = 0; i < static_cast<int>(record.tokens.size()); ++i) {
        if (eligible(record.tokens[i])) candidates.push_back(i);
      }
      std::vector<int> order = TopOrder(candidates, record.scores);
      if (options.selection == Selection::kBottom) {
        std::reverse(order.begin(), order.end());
      }
      order.resize(SelectionCount(options.percent, static_cast<int>(order.size())));
      std::sort(order.begin(), order.end());

      RecordSelection selected;
      selected.record_id = record.record_id;
      for (int position : order) selected.tokens.push_back(record.tokens[position]);
      selected.positions = std::move(order);
      if (!list.record_index_
               .emplace(record.record_id, static_cast<int>(list.records_.size()))
               .second) {
        return absl::InvalidArgumentError(
            absl::StrCat("duplicate record_id '", record.record_id, "'"));
      }
      list.records_.push_back(std::move(selected));
    }
    return list;
  }

  // Global scope: rank distinct surface forms by mean score.
  std::vector<std::string> forms;
  absl::flat_hash_map<std::string, int> form_index;
  std::vector<double> sums;
  std::vector<int> counts;
  for (const ImportanceRecord& record : records) {
    for (size_t i = 0; i < record.tokens.size() && i < record.scores.size(); ++i) {
      const std::string& token = record.tokens[i];
      if (!eligible(token)) continue;
      auto [it, inserted] = form_index.emplace(token, static_cast<int>(forms.size()));
      if (inserted) {
        forms.push_back(token);
        sums.push_back(0.0);
        counts.push_back(0);
      }
      sums[it->second] += record.scores[i];
      counts[it->second] += 1;
    }
  }
  std::vector<double> means(forms.size());
  for (size_t f = 0; f < forms.size(); ++f) means[f] = sums[f] / counts[f];
  std::vector<int> candidates(forms.size());
  std::iota(candidates.begin(), candidates.end(), 0);
  std::vector<int> order = TopOrder(candidates, means);
  if (options.selection == Selection::kBottom) {
    std::reverse(order.begin(), order.end());
  }
  order.resize(SelectionCount(options.percent, static_cast<int>(order.size())));
  for (int f : order) {
    list.global_tokens_.push_back(forms[f]);
    list.global_set_.insert(forms[f]);
  }
  return list;
}

std::string ExportSensitiveList(const SensitiveList& list) {
  std::string out;
  if (list.scope() == SelectionScope::kGlobal) {
    for (const std::string& token : list.global_tokens()) {
      absl::StrAppend(&out, token, "\n");
    }
    return out;
  }
  for (const RecordSelection& r : list.records()) {
    for (size_t i = 0; i < r.positions.size(); ++i) {
      absl::StrAppend(&out, r.record_id, "\t", r.positions[i], "\t", r.tokens[i],
                      "\n");
    }
  }
  return out;
}

std::vector<ImportanceRecord> FallbackScores(const Document& doc) {
  std::vector<RecordTokens> tokenized;
  tokenized.reserve(doc.records.size());
  absl::flat_hash_map<std::string, int64_t> counts;
  for (const Record& record : doc.records) {
    tokenized.push_back(TokenizeRecord(record));
    const RecordTokens& t = tokenized.back();
    for (size_t i = 0; i < t.flat.size(); ++i) {
      if (!t.IsBoundary(static_cast<int>(i))) ++counts[t.flat[i]];
    }
  }
  std::vector<ImportanceRecord> out;
  out.reserve(doc.records.size());
  for (size_t r = 0; r < doc.records.size(); ++r) {
    const RecordTokens& t = tokenized[r];
    ImportanceRecord record;
    record.record_id = doc.records[r].record_id;
    record.tokens = t.flat;
    record.scores.resize(t.flat.size(), 0.0);
    double total = 0.0;
    for (size_t i = 0; i < t.flat.size(); ++i) {
      if (t.IsBoundary(static_cast<int>(i))) continue;
      record.scores[i] = 1.0 / static_cast<double>(counts[t.flat[i]]);
      total += record.scores[i];
    }
    if (total > 0.0) {
      for (double& s : record.scores) s /= total;
    }
    out.push_back(std::move(record));
  }
  return out;
}

absl::StatusOr<absl::flat_hash_set<std::string>> LoadStoplist(
    const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFileToString(path));
  absl::flat_hash_set<std::string> words;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    line = absl::StripAsciiWhitespace(line);
    if (line.empty() || line.front() == '#') continue;
    words.insert(absl::AsciiStrToLower(line));
  }
  return words;
}

}  // namespace textdp

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

#include "textdp/evaluation.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <thread>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "textdp/digest.h"
#include "textdp/file_io.h"
#include "textdp/sampler.h"
#include "textdp/status_macros.h"

namespace textdp {
namespace {

constexpr absl::string_view kCsvHeader =
    "percent,selection,strategy,seed,tokens_total,tokens_in_vocab,"
    "tokens_sensitive,tokens_sensitive_oov,tokens_perturbed,"
    "tokens_self_retained,tokens_passed_through";

std::string ShortestDouble(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

absl::StatusOr<int64_t> ParseCount(absl::string_view key, absl::string_view value) {
  int64_t parsed;
  if (!absl::SimpleAtoi(value, &parsed) || parsed < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("attack report: '", key, "' must be a non-negative integer"));
  }
  return parsed;
}

}  // namespace

absl::StatusOr<AttackReport> MakeAttackReport(int64_t attempts,
                                              int64_t successes) {
  if (attempts < 0 || successes < 0) {
    return absl::InvalidArgumentError("attack counts must be non-negative");
  }
  if (successes > attempts) {
    return absl::InvalidArgumentError(absl::StrCat(
        "attack report has ", successes, " successes for ", attempts, " attempts"));
  }
  AttackReport report;
  report.attempts = attempts;
  report.successes = successes;
  report.empty = attempts == 0;
  report.rmask = report.empty ? 0.0
                              : static_cast<double>(successes) /
                                    static_cast<double>(attempts);
  report.privacy_score = 1.0 - report.rmask;
  return report;
}

absl::StatusOr<AttackReport> ParseAttackReport(absl::string_view text) {
  std::optional<int64_t> attempts, successes;
  std::optional<double> rmask;
  const absl::string_view trimmed = absl::StripAsciiWhitespace(text);
  if (!trimmed.empty() && trimmed.front() == '{') {
    const nlohmann::json object =
        nlohmann::json::parse(trimmed, nullptr, /*allow_exceptions=*/false);
    if (object.is_discarded() || !object.is_object()) {
      return absl::InvalidArgumentError("attack report: malformed JSON");
    }
    for (const char* key : {"attempts", "successes"}) {
      if (!object.contains(key) || !object[key].is_number_integer()) {
        return absl::InvalidArgumentError(
            absl::StrCat("attack report: missing integer '", key, "'"));
      }
    }
    attempts = object["attempts"].get<int64_t>();
    successes = object["successes"].get<int64_t>();
    if (object.contains("rmask")) {
      if (!object["rmask"].is_number()) {
        return absl::InvalidArgumentError("attack report: 'rmask' is not a number");
      }
      rmask = object["rmask"].get<double>();
    }
  } else {
    int line_number = 0;
    for (absl::string_view line : absl::StrSplit(text, '\n')) {
      ++line_number;
      line = absl::StripAsciiWhitespace(line);
      if (line.empty() || line.front() == '#') continue;
      const size_t split = line.find_first_of(" \t");
      if (split == absl::string_view::npos) {
        return absl::InvalidArgumentError(absl::StrCat(
            "attack report line ", line_number, ": expected 'key value'"));
      }
      const absl::string_view key = line.substr(0, split);
      const absl::string_view value = absl::StripAsciiWhitespace(line.substr(split));
      if (key == "attempts") {
        ASSIGN_OR_RETURN(attempts, ParseCount(key, value));
      } else if (key == "successes") {
        ASSIGN_OR_RETURN(successes, ParseCount(key, value));
      } else if (key == "rmask") {
        double parsed;
        if (!absl::SimpleAtod(value, &parsed)) {
          return absl::InvalidArgumentError("attack report: bad 'rmask'");
        }
        rmask = parsed;
      }
    }
  }
  if (!attempts.has_value() || !successes.has_value()) {
    return absl::InvalidArgumentError(
        "attack report needs both 'attempts' and 'successes'");
  }
  ASSIGN_OR_RETURN(AttackReport report, MakeAttackReport(*attempts, *successes));
  if (rmask.has_value() && std::abs(*rmask - report.rmask) > 1e-9) {
    return absl::InvalidArgumentError(absl::StrCat(
        "attack report: rmask ", *rmask, " disagrees with ", report.successes,
        "/", report.attempts));
  }
  return report;
}

absl::StatusOr<AttackReport> IngestAttackReport(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFileToString(path));
  return ParseAttackReport(text);
}

absl::StatusOr<AuditSummary> AuditTable(const MappingTable& table,
                                        const ScoringTable& scores,
                                        double epsilon,
                                        const AuditOptions& options) {
  RETURN_IF_ERROR(ValidateEpsilon(epsilon));
  if (scores.size() != table.vocab().size()) {
    return absl::InvalidArgumentError("scoring table does not match mapping table");
  }
  AuditSummary summary;
  summary.epsilon = epsilon;
  summary.bound = std::exp(epsilon);
  summary.exhaustive = table.vocab().size() <= options.exhaustive_limit;
  TokenRng rng(options.seed);

  auto check = [&](int a, int b) -> absl::Status {
    const std::span<const int> set = table.OutputSetOf(a);
    ASSIGN_OR_RETURN(double ratio,
                     AuditDp(scores.row(a), set, scores.row(b),
                             table.OutputSetOf(b), epsilon));
    ++summary.pairs_checked;
    if (ratio > summary.max_ratio || summary.worst_a < 0) {
      summary.max_ratio = std::max(summary.max_ratio, ratio);
      summary.worst_a = a;
      summary.worst_b = b;
    }
    return absl::OkStatus();
  };

  for (const std::vector<int>& set : table.sets()) {
    const int64_t size = static_cast<int64_t>(set.size());
    if (size < 2) continue;
    const bool all_pairs =
        summary.exhaustive || size * (size - 1) <= options.sampled_pairs_per_set;
    if (all_pairs) {
      for (int a : set) {
        for (int b : set) {
          if (a != b) RETURN_IF_ERROR(check(a, b));
        }
      }
      continue;
    }
    for (int i = 0; i < options.sampled_pairs_per_set; ++i) {
      const int a = set[static_cast<size_t>(rng.NextUniform() * size)];
      int b = set[static_cast<size_t>(rng.NextUniform() * (size - 1))];
      if (b == a) b = set.back();
      RETURN_IF_ERROR(check(a, b));
    }
  }
  return summary;
}

std::string GridCell::Descriptor() const {
  return absl::StrCat("percent=", ShortestDouble(percent),
                      ";selection=", SelectionName(selection),
                      ";strategy=", StrategyName(strategy));
}

std::vector<GridCell> MakeGrid(std::span<const double> percents,
                               std::span<const Selection> selections,
                               std::span<const Strategy> strategies) {
  std::vector<GridCell> grid;
  for (double p : percents) {
    for (Selection s : selections) {
      for (Strategy t : strategies) grid.push_back({p, s, t});
    }
  }
  return grid;
}

uint64_t CellSeed(uint64_t master_seed, const GridCell& cell) {
  return master_seed ^ StableHash64(cell.Descriptor());
}

absl::StatusOr<std::vector<SweepRow>> Sweep(
    const Document& doc, std::span<const GridCell> grid,
    const SweepOptions& options, const MappingTable& table,
    const ScoringTable& scores, std::span<const ImportanceRecord> importance,
    std::vector<Document>* corpora) {
  if (grid.empty()) return absl::InvalidArgumentError("sweep grid is empty");
  std::vector<absl::StatusOr<SanitizeResult>> results(
      grid.size(), absl::UnknownError("not run"));
  auto run_cell = [&](size_t c) {
    const GridCell& cell = grid[c];
    SelectionOptions selection;
    selection.selection = cell.selection;
    selection.percent = cell.percent;
    selection.scope = options.scope;
    selection.stopwords = options.stopwords;
    absl::StatusOr<SensitiveList> sensitive = SelectSensitive(importance, selection);
    if (!sensitive.ok()) {
      results[c] = sensitive.status();
      return;
    }
    SanitizerConfig config;
    config.epsilon = options.epsilon;
    config.strategy = cell.strategy;
    config.cache_scope = options.cache_scope;
    config.seed = CellSeed(options.seed, cell);
    results[c] = Sanitize(doc, config, table, scores, *sensitive);
  };

  const size_t workers = std::clamp<size_t>(options.threads, 1, grid.size());
  {
    std::vector<std::jthread> pool;
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (size_t c = w; c < grid.size(); c += workers) run_cell(c);
      });
    }
  }

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  if (corpora != nullptr) corpora->clear();
  for (size_t c = 0; c < grid.size(); ++c) {
    if (!results[c].ok()) {
      return absl::Status(results[c].status().code(),
                          absl::StrCat(grid[c].Descriptor(), ": ",
                                       results[c].status().message()));
    }
    rows.push_back({grid[c], CellSeed(options.seed, grid[c]), results[c]->report});
    if (corpora != nullptr) corpora->push_back(std::move(results[c]->doc));
  }
  return rows;
}

std::string SweepToCsv(std::span<const SweepRow> rows) {
  std::string out = absl::StrCat(kCsvHeader, "\n");
  for (const SweepRow& row : rows) {
    const SanitizationReport& r = row.report;
    absl::StrAppend(&out, ShortestDouble(row.cell.percent), ",",
                    SelectionName(row.cell.selection), ",",
                    StrategyName(row.cell.strategy), ",", row.seed, ",",
                    r.tokens_total, ",", r.tokens_in_vocab, ",",
                    r.tokens_sensitive, ",", r.tokens_sensitive_oov, ",",
                    r.tokens_perturbed, ",", r.tokens_self_retained, ",",
                    r.tokens_passed_through, "\n");
  }
  return out;
}

absl::StatusOr<std::vector<SweepRow>> ParseSweepCsv(absl::string_view text) {
  std::vector<absl::string_view> lines = absl::StrSplit(text, '\n', absl::SkipEmpty());
  if (lines.empty() || lines[0] != kCsvHeader) {
    return absl::InvalidArgumentError("results table: unexpected header");
  }
  std::vector<SweepRow> rows;
  for (size_t l = 1; l < lines.size(); ++l) {
    const std::vector<absl::string_view> f = absl::StrSplit(lines[l], ',');
    if (f.size() != 11) {
      return absl::InvalidArgumentError(
          absl::StrCat("results table line ", l + 1, ": expected 11 fields"));
    }
    SweepRow row;
    auto bad = [&] {
      return absl::InvalidArgumentError(
          absl::StrCat("results table line ", l + 1, ": bad value"));
    };
    if (!absl::SimpleAtod(f[0], &row.cell.percent)) return bad();
    ASSIGN_OR_RETURN(row.cell.selection, ParseSelection(f[1]));
    ASSIGN_OR_RETURN(row.cell.strategy, ParseStrategy(f[2]));
    if (!absl::SimpleAtoi(f[3], &row.seed)) return bad();
    int64_t* counters[] = {
        &row.report.tokens_total,         &row.report.tokens_in_vocab,
        &row.report.tokens_sensitive,     &row.report.tokens_sensitive_oov,
        &row.report.tokens_perturbed,     &row.report.tokens_self_retained,
        &row.report.tokens_passed_through};
    for (int i = 0; i < 7; ++i) {
      if (!absl::SimpleAtoi(f[4 + i], counters[i])) return bad();
    }
    if (!row.report.Reconciles()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "results table line ", l + 1, ": counters do not reconcile"));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace textdp

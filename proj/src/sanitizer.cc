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

#include "textdp/sanitizer.h"

#include <algorithm>
#include <optional>
#include <thread>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"
#include "textdp/sampler.h"
#include "textdp/status_macros.h"

namespace textdp {
namespace {

using ReplacementCache = absl::flat_hash_map<std::string, std::string>;

struct RecordOutcome {
  Record record;
  SanitizationReport report;
  std::vector<SampledPosition> sampled;
};

class RecordSanitizer {
 public:
  RecordSanitizer(const SanitizerConfig& config, const MappingTable& table,
                  const ScoringTable& scores, const SensitiveList& sensitive)
      : config_(config), table_(table), scores_(scores), sensitive_(sensitive) {}

  absl::StatusOr<RecordOutcome> Run(const Record& record, TokenRng& rng,
                                    ReplacementCache& cache) const {
    const RecordTokens tokens = TokenizeRecord(record);
    const int n = static_cast<int>(tokens.flat.size());
    std::vector<char> sensitive(n, 0);
    if (sensitive_.scope() == SelectionScope::kPerRecord) {
      if (const RecordSelection* sel = sensitive_.ForRecord(record.record_id)) {
        for (size_t i = 0; i < sel->positions.size(); ++i) {
          const int p = sel->positions[i];
          if (p < 0 || p >= n || tokens.IsBoundary(p) ||
              tokens.flat[p] != sel->tokens[i]) {
            return absl::InvalidArgumentError(absl::StrCat(
                "sensitive token '", sel->tokens[i], "' at position ", p,
                " does not match record '", record.record_id, "'"));
          }
          sensitive[p] = 1;
        }
      }
    } else {
      for (int p = 0; p < n; ++p) {
        sensitive[p] = !tokens.IsBoundary(p) &&
                       sensitive_.ContainsGlobal(tokens.flat[p]);
      }
    }

    RecordOutcome out;
    out.record = record;
    std::vector<std::vector<std::optional<std::string>>> replacements;
    for (const auto& field : tokens.fields) replacements.emplace_back(field.size());

    SanitizationReport& report = out.report;
    for (int p = 0; p < n; ++p) {
      if (tokens.IsBoundary(p)) continue;
      const std::string& token = tokens.flat[p];
      ++report.tokens_total;
      const std::optional<int> ordinal = table_.vocab().Find(token);
      if (ordinal.has_value()) ++report.tokens_in_vocab;
      if (!sensitive[p]) {
        ++report.tokens_passed_through;
        continue;
      }
      ++report.tokens_sensitive;
      if (!ordinal.has_value()) {
        ++report.tokens_sensitive_oov;
        ++report.tokens_passed_through;
        continue;
      }
      std::string replacement;
      auto cached = cache.end();
      if (config_.strategy == Strategy::kConservative) cached = cache.find(token);
      if (cached != cache.end()) {
        replacement = cached->second;
      } else {
        const std::span<const int> support = table_.OutputSetOf(*ordinal);
        const std::vector<double> probs =
            Distribution(scores_.row(*ordinal), support, config_.epsilon).probs;
        replacement = table_.vocab().token(support[SampleIndex(probs, rng)]);
        if (config_.strategy == Strategy::kConservative) {
          cache.emplace(token, replacement);
        }
      }
      if (replacement == token) {
        ++report.tokens_self_retained;
      } else {
        ++report.tokens_perturbed;
        const auto [field, index] = tokens.origin[p];
        replacements[field][index] = replacement;
      }
      out.sampled.push_back({p, token, std::move(replacement)});
    }

    for (size_t f = 0; f < tokens.fields.size(); ++f) {
      ASSIGN_OR_RETURN(out.record.texts[f],
                       Detokenize(record.texts[f], tokens.fields[f], replacements[f]));
    }
    return out;
  }

 private:
  const SanitizerConfig& config_;
  const MappingTable& table_;
  const ScoringTable& scores_;
  const SensitiveList& sensitive_;
};

}  // namespace

absl::string_view StrategyName(Strategy strategy) {
  return strategy == Strategy::kAggressive ? "aggressive" : "conservative";
}

absl::StatusOr<Strategy> ParseStrategy(absl::string_view name) {
  if (name == "aggressive") return Strategy::kAggressive;
  if (name == "conservative") return Strategy::kConservative;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown strategy '", name, "'; expected aggressive|conservative"));
}

absl::string_view CacheScopeName(CacheScope scope) {
  return scope == CacheScope::kRecord ? "record" : "document";
}

absl::StatusOr<CacheScope> ParseCacheScope(absl::string_view name) {
  if (name == "record") return CacheScope::kRecord;
  if (name == "document") return CacheScope::kDocument;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown cache scope '", name, "'; expected record|document"));
}

absl::string_view SeedingModeName(SeedingMode mode) {
  return mode == SeedingMode::kSequential ? "sequential" : "per-record";
}

absl::StatusOr<SeedingMode> ParseSeedingMode(absl::string_view name) {
  if (name == "sequential") return SeedingMode::kSequential;
  if (name == "per-record") return SeedingMode::kPerRecord;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown seeding mode '", name, "'; expected sequential|per-record"));
}

bool SanitizationReport::Reconciles() const {
  const bool non_negative =
      tokens_total >= 0 && tokens_in_vocab >= 0 && tokens_sensitive >= 0 &&
      tokens_sensitive_oov >= 0 && tokens_perturbed >= 0 &&
      tokens_self_retained >= 0 && tokens_passed_through >= 0;
  return non_negative &&
         tokens_perturbed + tokens_self_retained + tokens_passed_through ==
             tokens_total &&
         tokens_sensitive == sampled() + tokens_sensitive_oov &&
         tokens_in_vocab <= tokens_total && tokens_sensitive <= tokens_total;
}

SanitizationReport& SanitizationReport::operator+=(
    const SanitizationReport& other) {
  tokens_total += other.tokens_total;
  tokens_in_vocab += other.tokens_in_vocab;
  tokens_sensitive += other.tokens_sensitive;
  tokens_sensitive_oov += other.tokens_sensitive_oov;
  tokens_perturbed += other.tokens_perturbed;
  tokens_self_retained += other.tokens_self_retained;
  tokens_passed_through += other.tokens_passed_through;
  return *this;
}

absl::StatusOr<SanitizeResult> Sanitize(const Document& doc,
                                        const SanitizerConfig& config,
                                        const MappingTable& table,
                                        const ScoringTable& scores,
                                        const SensitiveList& sensitive) {
  RETURN_IF_ERROR(ValidateEpsilon(config.epsilon));
  if (scores.size() != table.vocab().size() ||
      scores.metric() != table.metric()) {
    return absl::InvalidArgumentError(
        "scoring table was not built over the mapping table's vocabulary");
  }
  if (config.seeding == SeedingMode::kPerRecord &&
      config.strategy == Strategy::kConservative &&
      config.cache_scope == CacheScope::kDocument) {
    return absl::InvalidArgumentError(
        "a document-scope replacement cache needs sequential seeding");
  }
  if (sensitive.scope() == SelectionScope::kPerRecord) {
    absl::flat_hash_set<absl::string_view> ids;
    for (const Record& record : doc.records) ids.insert(record.record_id);
    for (const RecordSelection& sel : sensitive.records()) {
      if (!ids.contains(sel.record_id)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "sensitive list names unknown record_id '", sel.record_id, "'"));
      }
    }
  }

  const RecordSanitizer sanitizer(config, table, scores, sensitive);
  const size_t num_records = doc.records.size();
  std::vector<absl::StatusOr<RecordOutcome>> outcomes(
      num_records, absl::UnknownError("not processed"));

  if (config.seeding == SeedingMode::kSequential) {
    TokenRng rng(config.seed);
    ReplacementCache cache;
    for (size_t r = 0; r < num_records; ++r) {
      if (config.cache_scope == CacheScope::kRecord) cache.clear();
      outcomes[r] = sanitizer.Run(doc.records[r], rng, cache);
      if (!outcomes[r].ok()) return outcomes[r].status();
    }
  } else {
    const size_t workers = std::clamp<size_t>(config.threads, 1, std::max<size_t>(num_records, 1));
    std::vector<std::jthread> pool;
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (size_t r = w; r < num_records; r += workers) {
          TokenRng rng(config.seed ^ static_cast<uint64_t>(r));
          ReplacementCache cache;
          outcomes[r] = sanitizer.Run(doc.records[r], rng, cache);
        }
      });
    }
    pool.clear();
  }

  SanitizeResult result;
  result.doc.layout = doc.layout;
  result.doc.records.reserve(num_records);
  result.sampled.reserve(num_records);
  for (auto& outcome : outcomes) {
    if (!outcome.ok()) return outcome.status();
    result.doc.records.push_back(std::move(outcome->record));
    result.report += outcome->report;
    result.sampled.push_back(std::move(outcome->sampled));
  }
  return result;
}

}  // namespace textdp

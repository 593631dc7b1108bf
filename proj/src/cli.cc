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

#include "textdp/cli.h"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_replace.h"
#include "absl/strings/string_view.h"
#include "absl/time/clock.h"
#include "absl/time/time.h"
#include "json.hpp"
#include "textdp/corpus.h"
#include "textdp/digest.h"
#include "textdp/embeddings.h"
#include "textdp/evaluation.h"
#include "textdp/file_io.h"
#include "textdp/importance.h"
#include "textdp/mapping.h"
#include "textdp/mapping_cache.h"
#include "textdp/sanitizer.h"
#include "textdp/scoring.h"
#include "textdp/status_macros.h"

namespace textdp {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr absl::string_view kManifestFileName = "manifest.json";

std::string Now() {
  return absl::FormatTime(absl::RFC3339_full, absl::Now(), absl::UTCTimeZone());
}

std::string Join(const std::string& dir, absl::string_view name) {
  return (fs::path(dir) / std::string(name)).string();
}

// Collects the config echo and input digests of one run and writes them as
// the output directory's manifest.
class Manifest {
 public:
  Manifest(absl::string_view command, Json config)
      : command_(command), config_(std::move(config)), started_(Now()) {}

  absl::Status AddInput(absl::string_view name, const std::string& path) {
    std::string file = path;
    if (fs::is_directory(path)) file = Join(path, kMappingCacheFileName);
    ASSIGN_OR_RETURN(std::string digest, Sha256File(file));
    inputs_[std::string(name)] = {{"path", path}, {"sha256", digest}};
    return absl::OkStatus();
  }

  absl::Status Write(const std::string& dir, std::optional<uint64_t> seed) const {
    Json manifest;
    manifest["tool"] = "textdp";
    manifest["version"] = kToolVersion;
    manifest["command"] = command_;
    manifest["config"] = config_;
    manifest["inputs"] = inputs_;
    manifest["seed"] = seed.has_value() ? Json(*seed) : Json(nullptr);
    manifest["started_at"] = started_;
    manifest["finished_at"] = Now();
    return WriteStringToFile(Join(dir, kManifestFileName), manifest.dump(2) + "\n");
  }

 private:
  std::string command_;
  Json config_;
  Json inputs_ = Json::object();
  std::string started_;
};

Json ReportJson(const SanitizationReport& r) {
  Json j;
  j["tokens_total"] = r.tokens_total;
  j["tokens_in_vocab"] = r.tokens_in_vocab;
  j["tokens_sensitive"] = r.tokens_sensitive;
  j["tokens_sensitive_oov"] = r.tokens_sensitive_oov;
  j["tokens_perturbed"] = r.tokens_perturbed;
  j["tokens_self_retained"] = r.tokens_self_retained;
  j["tokens_passed_through"] = r.tokens_passed_through;
  return j;
}

std::string CorpusExtension(const std::string& input) {
  return FormatForPath(input) == CorpusFormat::kJsonl ? ".jsonl" : ".tsv";
}

struct BuildMapFlags {
  std::string embeddings;
  int k = 0;
  std::string metric;
  std::optional<int> limit;
  std::string pivot_order = "file";
  uint64_t pivot_seed = 0;
  std::string out;
};

struct ScoreFlags {
  std::string input;
  std::string out;
};

struct SelectionFlags {
  std::string scope = "record";
  std::string cache_scope = "record";
  std::string stoplist;
};

struct SanitizeFlags {
  std::string input;
  std::string map;
  std::string importance;
  double epsilon = 0.0;
  double percent = 0.0;
  std::string selection;
  std::string strategy;
  uint64_t seed = 0;
  std::string seeding = "sequential";
  int threads = 1;
  bool export_sensitive = false;
  SelectionFlags sel;
  std::string out;
};

struct SweepFlags {
  std::string input;
  std::string map;
  std::string importance;
  double epsilon = 0.0;
  std::vector<double> percents = {10, 20, 30, 40, 50, 60};
  std::vector<std::string> selections = {"top", "bottom"};
  std::vector<std::string> strategies = {"aggressive"};
  uint64_t seed = 0;
  int threads = 1;
  bool emit_corpora = false;
  SelectionFlags sel;
  std::string out;
};

struct AuditFlags {
  std::string map;
  double epsilon = 0.0;
  int exhaustive_limit = 200;
  int sampled_pairs = 64;
  uint64_t seed = 0;
  std::string out;
};

absl::Status RunBuildMap(const BuildMapFlags& f, std::ostream& out) {
  ASSIGN_OR_RETURN(Metric metric, ParseMetric(f.metric));
  PivotPolicy pivot;
  ASSIGN_OR_RETURN(pivot.order, ParsePivotOrder(f.pivot_order));
  pivot.seed = f.pivot_seed;

  Json config;
  config["embeddings"] = f.embeddings;
  config["k"] = f.k;
  config["metric"] = f.metric;
  config["limit"] = f.limit.has_value() ? Json(*f.limit) : Json(nullptr);
  config["pivot_order"] = f.pivot_order;
  config["pivot_seed"] = f.pivot_seed;
  config["out"] = f.out;
  Manifest manifest("build-map", config);
  RETURN_IF_ERROR(manifest.AddInput("embeddings", f.embeddings));

  LoadOptions load;
  load.limit = f.limit;
  load.reject_zero_norm = metric == Metric::kCosine;
  ASSIGN_OR_RETURN(LoadedEmbeddings emb, LoadEmbeddings(f.embeddings, load));
  ASSIGN_OR_RETURN(std::string digest, Sha256File(f.embeddings));
  ASSIGN_OR_RETURN(MappingTable table,
                   BuildMapping(emb.vocab, emb.matrix, f.k, metric, pivot));
  table.set_source_digest(digest);
  ASSIGN_OR_RETURN(ScoringTable scores, BuildScores(table, emb.matrix));

  RETURN_IF_ERROR(EnsureDirectory(f.out));
  RETURN_IF_ERROR(
      WriteMappingCache(Join(f.out, kMappingCacheFileName), table, scores));
  RETURN_IF_ERROR(manifest.Write(f.out, std::nullopt));

  const MappingBuildReport& report = table.report();
  out << "vocabulary " << emb.vocab.size() << " dim " << emb.matrix.dim()
      << " duplicates_skipped " << emb.duplicates_skipped << "\n";
  out << "sets " << table.sets().size() << " full " << report.full_sets
      << " remainder " << report.remainder_size << "\n";
  out << "sensitivity " << Sensitivity(table, scores) << " (sampler uses "
      << ScoringTable::kDeltaU << ")\n";
  if (report.singleton_remainder) {
    out << "warning: remainder set of size 1; token '"
        << table.vocab().token(table.sets().back().front())
        << "' always maps to itself\n";
  }
  return absl::OkStatus();
}

absl::Status RunScore(const ScoreFlags& f, std::ostream& out) {
  Json config;
  config["input"] = f.input;
  config["out"] = f.out;
  Manifest manifest("score", config);
  RETURN_IF_ERROR(manifest.AddInput("input", f.input));
  ASSIGN_OR_RETURN(Document doc, ReadCorpus(f.input));
  const std::vector<ImportanceRecord> records = FallbackScores(doc);
  RETURN_IF_ERROR(EnsureDirectory(f.out));
  RETURN_IF_ERROR(WriteImportance(Join(f.out, "importance.jsonl"), records));
  RETURN_IF_ERROR(manifest.Write(f.out, std::nullopt));
  out << "records " << records.size() << "\n";
  return absl::OkStatus();
}

absl::StatusOr<absl::flat_hash_set<std::string>> MaybeStoplist(
    const std::string& path) {
  if (path.empty()) return absl::flat_hash_set<std::string>();
  return LoadStoplist(path);
}

struct LoadedInputs {
  Document doc;
  MappingCache cache;
  ImportanceFile importance;
  absl::flat_hash_set<std::string> stopwords;
};

absl::StatusOr<LoadedInputs> LoadInputs(const std::string& input,
                                        const std::string& map,
                                        const std::string& importance,
                                        const std::string& stoplist,
                                        Manifest& manifest, std::ostream& out) {
  RETURN_IF_ERROR(manifest.AddInput("input", input));
  RETURN_IF_ERROR(manifest.AddInput("map", map));
  RETURN_IF_ERROR(manifest.AddInput("importance", importance));
  if (!stoplist.empty()) RETURN_IF_ERROR(manifest.AddInput("stoplist", stoplist));
  ASSIGN_OR_RETURN(Document doc, ReadCorpus(input));
  ASSIGN_OR_RETURN(MappingCache cache, ReadMappingCache(map));
  ASSIGN_OR_RETURN(ImportanceFile imp, LoadImportance(importance));
  if (imp.renormalized > 0) {
    out << "warning: renormalized " << imp.renormalized
        << " importance records\n";
  }
  RETURN_IF_ERROR(CheckAlignment(doc, imp.records));
  ASSIGN_OR_RETURN(absl::flat_hash_set<std::string> stopwords,
                   MaybeStoplist(stoplist));
  return LoadedInputs{std::move(doc), std::move(cache), std::move(imp),
                      std::move(stopwords)};
}

absl::Status RunSanitize(const SanitizeFlags& f, std::ostream& out) {
  SelectionOptions selection;
  ASSIGN_OR_RETURN(selection.selection, ParseSelection(f.selection));
  ASSIGN_OR_RETURN(selection.scope, ParseScope(f.sel.scope));
  selection.percent = f.percent;
  SanitizerConfig config;
  config.epsilon = f.epsilon;
  config.seed = f.seed;
  config.threads = f.threads;
  ASSIGN_OR_RETURN(config.strategy, ParseStrategy(f.strategy));
  ASSIGN_OR_RETURN(config.cache_scope, ParseCacheScope(f.sel.cache_scope));
  ASSIGN_OR_RETURN(config.seeding, ParseSeedingMode(f.seeding));

  Json echo;
  echo["input"] = f.input;
  echo["map"] = f.map;
  echo["importance"] = f.importance;
  echo["epsilon"] = f.epsilon;
  echo["percent"] = f.percent;
  echo["selection"] = f.selection;
  echo["strategy"] = f.strategy;
  echo["scope"] = f.sel.scope;
  echo["cache_scope"] = f.sel.cache_scope;
  echo["seeding"] = f.seeding;
  echo["threads"] = f.threads;
  echo["stoplist"] = f.sel.stoplist;
  echo["seed"] = f.seed;
  echo["out"] = f.out;
  Manifest manifest("sanitize", echo);
  ASSIGN_OR_RETURN(LoadedInputs in, LoadInputs(f.input, f.map, f.importance,
                                               f.sel.stoplist, manifest, out));
  selection.stopwords = std::move(in.stopwords);
  echo["k"] = in.cache.table.k();
  echo["metric"] = MetricName(in.cache.table.metric());

  ASSIGN_OR_RETURN(SensitiveList sensitive,
                   SelectSensitive(in.importance.records, selection));
  ASSIGN_OR_RETURN(SanitizeResult result,
                   Sanitize(in.doc, config, in.cache.table, in.cache.scores,
                            sensitive));

  RETURN_IF_ERROR(EnsureDirectory(f.out));
  RETURN_IF_ERROR(WriteCorpus(Join(f.out, "sanitized" + CorpusExtension(f.input)),
                              result.doc));
  Json report;
  report["config"] = echo;
  report["report"] = ReportJson(result.report);
  RETURN_IF_ERROR(
      WriteStringToFile(Join(f.out, "report.json"), report.dump(2) + "\n"));
  if (f.export_sensitive) {
    RETURN_IF_ERROR(WriteStringToFile(Join(f.out, "sensitive.tsv"),
                                      ExportSensitiveList(sensitive)));
  }
  RETURN_IF_ERROR(manifest.Write(f.out, f.seed));

  const SanitizationReport& r = result.report;
  out << "tokens " << r.tokens_total << " sensitive " << r.tokens_sensitive
      << " perturbed " << r.tokens_perturbed << " self_retained "
      << r.tokens_self_retained << "\n";
  if (r.tokens_sensitive_oov > 0) {
    out << "warning: " << r.tokens_sensitive_oov
        << " sensitive tokens have no vector and were left unchanged\n";
  }
  return absl::OkStatus();
}

absl::Status RunSweep(const SweepFlags& f, std::ostream& out) {
  std::vector<Selection> selections;
  for (const std::string& s : f.selections) {
    ASSIGN_OR_RETURN(Selection parsed, ParseSelection(s));
    selections.push_back(parsed);
  }
  std::vector<Strategy> strategies;
  for (const std::string& s : f.strategies) {
    ASSIGN_OR_RETURN(Strategy parsed, ParseStrategy(s));
    strategies.push_back(parsed);
  }
  SweepOptions options;
  options.epsilon = f.epsilon;
  options.seed = f.seed;
  options.threads = f.threads;
  ASSIGN_OR_RETURN(options.scope, ParseScope(f.sel.scope));
  ASSIGN_OR_RETURN(options.cache_scope, ParseCacheScope(f.sel.cache_scope));
  const std::vector<GridCell> grid = MakeGrid(f.percents, selections, strategies);

  Json echo;
  echo["input"] = f.input;
  echo["map"] = f.map;
  echo["importance"] = f.importance;
  echo["epsilon"] = f.epsilon;
  echo["percents"] = f.percents;
  echo["selections"] = f.selections;
  echo["strategies"] = f.strategies;
  echo["scope"] = f.sel.scope;
  echo["cache_scope"] = f.sel.cache_scope;
  echo["stoplist"] = f.sel.stoplist;
  echo["threads"] = f.threads;
  echo["seed"] = f.seed;
  echo["emit_corpora"] = f.emit_corpora;
  echo["out"] = f.out;
  Manifest manifest("sweep", echo);
  ASSIGN_OR_RETURN(LoadedInputs in, LoadInputs(f.input, f.map, f.importance,
                                               f.sel.stoplist, manifest, out));
  options.stopwords = std::move(in.stopwords);

  std::vector<Document> corpora;
  ASSIGN_OR_RETURN(std::vector<SweepRow> rows,
                   Sweep(in.doc, grid, options, in.cache.table, in.cache.scores,
                         in.importance.records,
                         f.emit_corpora ? &corpora : nullptr));
  RETURN_IF_ERROR(EnsureDirectory(f.out));
  RETURN_IF_ERROR(WriteStringToFile(Join(f.out, "results.csv"), SweepToCsv(rows)));
  if (f.emit_corpora) {
    for (size_t c = 0; c < rows.size(); ++c) {
      const std::string dir = Join(
          Join(f.out, "corpora"),
          absl::StrReplaceAll(rows[c].cell.Descriptor(), {{";", "_"}, {"=", "-"}}));
      RETURN_IF_ERROR(EnsureDirectory(dir));
      RETURN_IF_ERROR(
          WriteCorpus(Join(dir, "sanitized" + CorpusExtension(f.input)), corpora[c]));
    }
  }
  RETURN_IF_ERROR(manifest.Write(f.out, f.seed));
  out << "cells " << rows.size() << "\n";
  return absl::OkStatus();
}

absl::Status RunAudit(const AuditFlags& f, std::ostream& out, bool& violated) {
  Json echo;
  echo["map"] = f.map;
  echo["epsilon"] = f.epsilon;
  echo["exhaustive_limit"] = f.exhaustive_limit;
  echo["sampled_pairs"] = f.sampled_pairs;
  echo["seed"] = f.seed;
  echo["out"] = f.out;
  Manifest manifest("audit", echo);
  RETURN_IF_ERROR(manifest.AddInput("map", f.map));
  ASSIGN_OR_RETURN(MappingCache cache, ReadMappingCache(f.map));
  AuditOptions options;
  options.exhaustive_limit = f.exhaustive_limit;
  options.sampled_pairs_per_set = f.sampled_pairs;
  options.seed = f.seed;
  ASSIGN_OR_RETURN(AuditSummary summary,
                   AuditTable(cache.table, cache.scores, f.epsilon, options));
  Json j;
  j["epsilon"] = summary.epsilon;
  j["bound"] = summary.bound;
  j["max_ratio"] = summary.max_ratio;
  j["pairs_checked"] = summary.pairs_checked;
  j["exhaustive"] = summary.exhaustive;
  j["within_bound"] = summary.WithinBound();
  j["sensitivity"] = Sensitivity(cache.table, cache.scores);
  if (summary.worst_a >= 0) {
    j["worst_pair"] = {cache.table.vocab().token(summary.worst_a),
                       cache.table.vocab().token(summary.worst_b)};
  }
  out << j.dump(2) << "\n";
  if (!f.out.empty()) {
    RETURN_IF_ERROR(EnsureDirectory(f.out));
    RETURN_IF_ERROR(WriteStringToFile(Join(f.out, "audit.json"), j.dump(2) + "\n"));
    RETURN_IF_ERROR(manifest.Write(f.out, f.seed));
  }
  violated = !summary.WithinBound();
  return absl::OkStatus();
}

void AddSelectionFlags(CLI::App* cmd, SelectionFlags& f) {
  cmd->add_option("--scope", f.scope, "Sensitive-list scope")
      ->check(CLI::IsMember({"record", "global"}))
      ->capture_default_str();
  cmd->add_option("--cache-scope", f.cache_scope,
                  "Conservative replacement cache scope")
      ->check(CLI::IsMember({"record", "document"}))
      ->capture_default_str();
  cmd->add_option("--stoplist", f.stoplist,
                  "File of words never selected as sensitive")
      ->check(CLI::ExistingFile);
}

const auto kPercentCheck = CLI::Validator(
    [](std::string& value) -> std::string {
      double p;
      if (!absl::SimpleAtod(value, &p) || !(p > 0.0 && p <= 100.0)) {
        return "percent must lie in (0, 100]";
      }
      return "";
    },
    "(0,100]");

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Selective differentially private text sanitization", "textdp");
  app.set_config("--config", "", "TOML/INI file whose keys mirror the flags");
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1, 1);

  BuildMapFlags build;
  CLI::App* build_cmd = app.add_subcommand(
      "build-map", "Partition the vocabulary into output sets and score them");
  build_cmd->add_option("--embeddings", build.embeddings, "Word-vector file")
      ->required()
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--k", build.k, "Output-set size K")
      ->required()
      ->check(CLI::PositiveNumber);
  build_cmd->add_option("--metric", build.metric, "Similarity measure")
      ->required()
      ->check(CLI::IsMember({"euclidean", "cosine"}));
  build_cmd->add_option("--limit", build.limit, "Keep the first N tokens")
      ->check(CLI::NonNegativeNumber);
  build_cmd->add_option("--pivot-order", build.pivot_order, "Pivot order")
      ->check(CLI::IsMember({"file", "random"}))
      ->capture_default_str();
  build_cmd->add_option("--pivot-seed", build.pivot_seed,
                        "Seed for --pivot-order random")
      ->capture_default_str();
  build_cmd->add_option("--out", build.out, "Output directory")->required();

  ScoreFlags score;
  CLI::App* score_cmd = app.add_subcommand(
      "score", "Write inverse-frequency importance scores for a corpus");
  score_cmd->add_option("--input", score.input, "Corpus (.tsv or .jsonl)")
      ->required()
      ->check(CLI::ExistingFile);
  score_cmd->add_option("--out", score.out, "Output directory")->required();

  SanitizeFlags san;
  CLI::App* san_cmd =
      app.add_subcommand("sanitize", "Replace sensitive tokens of a corpus");
  san_cmd->add_option("--input", san.input, "Corpus (.tsv or .jsonl)")
      ->required()
      ->check(CLI::ExistingFile);
  san_cmd->add_option("--map", san.map, "Mapping cache file or directory")
      ->required()
      ->check(CLI::ExistingPath);
  san_cmd->add_option("--importance", san.importance, "Importance file")
      ->required()
      ->check(CLI::ExistingFile);
  san_cmd->add_option("--epsilon", san.epsilon, "Privacy parameter")
      ->required()
      ->check(CLI::NonNegativeNumber);
  san_cmd->add_option("--percent", san.percent, "Percent of tokens selected")
      ->required()
      ->check(kPercentCheck);
  san_cmd->add_option("--selection", san.selection, "Rank direction")
      ->required()
      ->check(CLI::IsMember({"top", "bottom"}));
  san_cmd->add_option("--strategy", san.strategy, "Replacement strategy")
      ->required()
      ->check(CLI::IsMember({"aggressive", "conservative"}));
  san_cmd->add_option("--seed", san.seed, "Random seed")->required();
  san_cmd->add_option("--seeding", san.seeding, "Generator layout")
      ->check(CLI::IsMember({"sequential", "per-record"}))
      ->capture_default_str();
  san_cmd->add_option("--threads", san.threads,
                      "Workers for --seeding per-record")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  san_cmd->add_flag("--export-sensitive", san.export_sensitive,
                    "Also write the sensitive list as sensitive.tsv");
  AddSelectionFlags(san_cmd, san.sel);
  san_cmd->add_option("--out", san.out, "Output directory")->required();

  SweepFlags sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Sanitize over a percent x selection x strategy grid");
  sweep_cmd->add_option("--input", sweep.input, "Corpus (.tsv or .jsonl)")
      ->required()
      ->check(CLI::ExistingFile);
  sweep_cmd->add_option("--map", sweep.map, "Mapping cache file or directory")
      ->required()
      ->check(CLI::ExistingPath);
  sweep_cmd->add_option("--importance", sweep.importance, "Importance file")
      ->required()
      ->check(CLI::ExistingFile);
  sweep_cmd->add_option("--epsilon", sweep.epsilon, "Privacy parameter")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--percents", sweep.percents, "Percent grid")
      ->delimiter(',')
      ->check(kPercentCheck)
      ->capture_default_str();
  sweep_cmd->add_option("--selections", sweep.selections, "Selection grid")
      ->delimiter(',')
      ->check(CLI::IsMember({"top", "bottom"}))
      ->capture_default_str();
  sweep_cmd->add_option("--strategies", sweep.strategies, "Strategy grid")
      ->delimiter(',')
      ->check(CLI::IsMember({"aggressive", "conservative"}))
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Master seed")->required();
  sweep_cmd->add_option("--threads", sweep.threads, "Cells run concurrently")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_flag("--emit-corpora", sweep.emit_corpora,
                      "Write each cell's sanitized corpus under corpora/");
  AddSelectionFlags(sweep_cmd, sweep.sel);
  sweep_cmd->add_option("--out", sweep.out, "Output directory")->required();

  AuditFlags audit;
  CLI::App* audit_cmd = app.add_subcommand(
      "audit", "Check the privacy bound over every output set of a cache");
  audit_cmd->add_option("--map", audit.map, "Mapping cache file or directory")
      ->required()
      ->check(CLI::ExistingPath);
  audit_cmd->add_option("--epsilon", audit.epsilon, "Privacy parameter")
      ->required()
      ->check(CLI::NonNegativeNumber);
  audit_cmd->add_option("--exhaustive-limit", audit.exhaustive_limit,
                        "Audit every pair up to this vocabulary size")
      ->capture_default_str();
  audit_cmd->add_option("--sampled-pairs", audit.sampled_pairs,
                        "Pairs sampled per set beyond the limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  audit_cmd->add_option("--seed", audit.seed, "Seed for pair sampling")
      ->capture_default_str();
  audit_cmd->add_option("--out", audit.out, "Optional output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  absl::Status status;
  bool violated = false;
  if (*build_cmd) {
    status = RunBuildMap(build, out);
  } else if (*score_cmd) {
    status = RunScore(score, out);
  } else if (*san_cmd) {
    status = RunSanitize(san, out);
  } else if (*sweep_cmd) {
    status = RunSweep(sweep, out);
  } else if (*audit_cmd) {
    status = RunAudit(audit, out, violated);
  }
  if (!status.ok()) {
    err << "error: " << status.message() << "\n";
    return kExitDataError;
  }
  if (violated) {
    err << "error: audit exceeded the e^epsilon bound\n";
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace textdp

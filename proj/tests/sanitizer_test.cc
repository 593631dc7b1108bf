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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "absl/strings/ascii.h"
#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace textdp {
namespace {

using ::testing::HasSubstr;

std::vector<std::string> AlphabeticWords() {
  std::vector<std::string> words;
  for (const std::string& w : testing::SyntheticWords()) {
    if (absl::ascii_isalpha(static_cast<unsigned char>(w[0]))) words.push_back(w);
  }
  return words;
}

struct Fixture {
  MappingCache tables;
  Document doc;
  std::vector<ImportanceRecord> importance;
};

Fixture MakeSetup(uint64_t seed, int k, int records) {
  std::mt19937_64 rng(seed);
  const testing::Instance instance = testing::WordInstance(rng, AlphabeticWords(), 8);
  Fixture setup{testing::BuildTables(instance, k, Metric::kEuclidean).value(),
              ParseCorpus(testing::SyntheticTsv(rng, records, 0, 14),
                          CorpusFormat::kTsv)
                  .value(),
              {}};
  setup.importance = FallbackScores(setup.doc);
  return setup;
}

SensitiveList Select(const std::vector<ImportanceRecord>& importance,
                     double percent, Selection selection = Selection::kTop) {
  SelectionOptions options;
  options.percent = percent;
  options.selection = selection;
  return SelectSensitive(importance, options).value();
}

absl::StatusOr<SanitizeResult> RunOn(const Fixture& s, const SensitiveList& sensitive,
                                   const SanitizerConfig& config) {
  return Sanitize(s.doc, config, s.tables.table, s.tables.scores, sensitive);
}

std::string Serialized(const Document& doc) { return SerializeCorpus(doc).value(); }

TEST(SanitizerTest, SingletonSetsAreIdentity) {
  const Fixture s = MakeSetup(1, 1, 60);
  SanitizerConfig config;
  config.seed = 9;
  ASSERT_OK_AND_ASSIGN(SanitizeResult result,
                       RunOn(s, Select(s.importance, 100), config));
  EXPECT_EQ(Serialized(result.doc), Serialized(s.doc));
  EXPECT_EQ(result.report.tokens_perturbed, 0);
  EXPECT_EQ(result.report.tokens_self_retained,
            result.report.tokens_sensitive - result.report.tokens_sensitive_oov);
  EXPECT_EQ(result.report.tokens_sensitive, result.report.tokens_total);
  EXPECT_TRUE(result.report.Reconciles());
}

TEST(SanitizerTest, EmptySensitiveListIsIdentity) {
  const Fixture s = MakeSetup(2, 5, 60);
  SanitizerConfig config;
  config.epsilon = 0.0;
  ASSERT_OK_AND_ASSIGN(SanitizeResult result, RunOn(s, SensitiveList::Empty(), config));
  EXPECT_EQ(Serialized(result.doc), Serialized(s.doc));
  EXPECT_EQ(result.report.tokens_sensitive, 0);
  EXPECT_EQ(result.report.tokens_passed_through, result.report.tokens_total);
  EXPECT_GT(result.report.tokens_total, 0);
}

TEST(SanitizerTest, ReplacementsStayInOutputSetAndOthersAreUntouched) {
  const Fixture s = MakeSetup(3, 4, 200);
  for (double percent : {10.0, 50.0, 100.0}) {
    for (Strategy strategy : {Strategy::kAggressive, Strategy::kConservative}) {
      const SensitiveList sensitive = Select(s.importance, percent);
      SanitizerConfig config;
      config.epsilon = 0.5;
      config.strategy = strategy;
      config.seed = 77;
      ASSERT_OK_AND_ASSIGN(SanitizeResult result, RunOn(s, sensitive, config));
      ASSERT_TRUE(result.report.Reconciles());
      const Vocabulary& vocab = s.tables.table.vocab();
      int64_t sampled = 0;
      for (size_t r = 0; r < s.doc.records.size(); ++r) {
        const RecordTokens before = TokenizeRecord(s.doc.records[r]);
        const RecordTokens after = TokenizeRecord(result.doc.records[r]);
        ASSERT_EQ(before.flat.size(), after.flat.size());
        std::vector<int> expected_sampled;
        if (const RecordSelection* sel = sensitive.ForRecord(s.doc.records[r].record_id)) {
          for (int p : sel->positions) {
            if (vocab.Contains(before.flat[p])) expected_sampled.push_back(p);
          }
        }
        std::vector<int> sampled_positions;
        for (const SampledPosition& sp : result.sampled[r]) {
          sampled_positions.push_back(sp.position);
          EXPECT_EQ(sp.original, before.flat[sp.position]);
          EXPECT_EQ(sp.replacement, after.flat[sp.position]);
          const auto set = s.tables.table.OutputSetOf(*vocab.Find(sp.original));
          EXPECT_THAT(testing::ToVector(set),
                      ::testing::Contains(*vocab.Find(sp.replacement)));
        }
        EXPECT_EQ(sampled_positions, expected_sampled);
        for (size_t p = 0, i = 0; p < before.flat.size(); ++p) {
          if (i < sampled_positions.size() && sampled_positions[i] == static_cast<int>(p)) {
            ++i;
            continue;
          }
          EXPECT_EQ(before.flat[p], after.flat[p]);
        }
        sampled += static_cast<int64_t>(result.sampled[r].size());
      }
      EXPECT_EQ(sampled, result.report.sampled());
      EXPECT_EQ(result.report.tokens_sensitive, sensitive.total_positions());
    }
  }
}

TEST(SanitizerTest, OutOfVocabularySensitiveTokensPassThrough) {
  const Fixture s = MakeSetup(4, 3, 100);
  SanitizerConfig config;
  ASSERT_OK_AND_ASSIGN(SanitizeResult result,
                       RunOn(s, Select(s.importance, 100), config));
  int64_t punctuation = 0;
  for (const Record& record : s.doc.records) {
    for (const std::string& t : TokenizeRecord(record).flat) {
      punctuation += !absl::ascii_isalpha(static_cast<unsigned char>(t[0]));
    }
  }
  EXPECT_GT(punctuation, 0);
  EXPECT_EQ(result.report.tokens_sensitive_oov, punctuation);
  EXPECT_EQ(result.report.tokens_in_vocab, result.report.tokens_total - punctuation);
}

// Names and filler words, small enough that every set has k members.
MappingCache NameTables(int k) {
  std::mt19937_64 rng(5);
  std::vector<std::string> words = {"alice", "bob", "carol", "dave", "met",
                                    "saw", "then", "and"};
  testing::Instance instance = testing::WordInstance(rng, words, 4);
  return testing::BuildTables(instance, k, Metric::kEuclidean).value();
}

Document Corpus(const std::string& tsv) {
  return ParseCorpus(tsv, CorpusFormat::kTsv).value();
}

SensitiveList AllPositions(const Document& doc) {
  return Select(FallbackScores(doc), 100);
}

std::vector<std::string> Replacements(const SanitizeResult& result, int record) {
  std::vector<std::string> out;
  for (const auto& sp : result.sampled[record]) out.push_back(sp.replacement);
  return out;
}

TEST(SanitizerTest, ConservativeReusesFirstDraw) {
  const MappingCache tables = NameTables(4);
  const Document doc = Corpus("sentence\nalice met alice\nalice saw alice\n");
  const SensitiveList all = AllPositions(doc);
  int differing_records = 0;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    SanitizerConfig config;
    config.epsilon = 0.0;
    config.strategy = Strategy::kConservative;
    config.seed = seed;
    ASSERT_OK_AND_ASSIGN(SanitizeResult result,
                         Sanitize(doc, config, tables.table, tables.scores, all));
    const auto first = Replacements(result, 0);
    const auto second = Replacements(result, 1);
    EXPECT_EQ(first[0], first[2]);
    EXPECT_EQ(second[0], second[2]);
    differing_records += first[0] != second[0];

    config.cache_scope = CacheScope::kDocument;
    ASSERT_OK_AND_ASSIGN(SanitizeResult shared,
                         Sanitize(doc, config, tables.table, tables.scores, all));
    EXPECT_EQ(Replacements(shared, 0)[0], Replacements(shared, 1)[0]);
    EXPECT_EQ(Replacements(shared, 1)[0], Replacements(shared, 1)[2]);
  }
  // Record scope draws afresh per record.
  EXPECT_GT(differing_records, 0);
}

TEST(SanitizerTest, AggressiveCollidesAtUniformRate) {
  const int k = 4;
  const MappingCache tables = NameTables(k);
  const Document doc = Corpus("sentence\nalice met alice\n");
  const SensitiveList all = AllPositions(doc);
  const int trials = 6000;
  int collisions = 0;
  for (int seed = 0; seed < trials; ++seed) {
    SanitizerConfig config;
    config.epsilon = 0.0;
    config.seed = seed;
    ASSERT_OK_AND_ASSIGN(SanitizeResult result,
                         Sanitize(doc, config, tables.table, tables.scores, all));
    const auto r = Replacements(result, 0);
    collisions += r[0] == r[2];
  }
  const double p = 1.0 / k;
  EXPECT_NEAR(static_cast<double>(collisions) / trials, p,
              3 * std::sqrt(p * (1 - p) / trials));
}

TEST(SanitizerTest, SequentialSeedingIsDeterministic) {
  const Fixture s = MakeSetup(6, 5, 120);
  const SensitiveList sensitive = Select(s.importance, 40);
  SanitizerConfig config;
  config.seed = 123;
  ASSERT_OK_AND_ASSIGN(SanitizeResult a, RunOn(s, sensitive, config));
  ASSERT_OK_AND_ASSIGN(SanitizeResult b, RunOn(s, sensitive, config));
  EXPECT_EQ(Serialized(a.doc), Serialized(b.doc));
  EXPECT_EQ(a.report, b.report);
  config.seed = 124;
  ASSERT_OK_AND_ASSIGN(SanitizeResult c, RunOn(s, sensitive, config));
  EXPECT_NE(Serialized(a.doc), Serialized(c.doc));
}

TEST(SanitizerTest, PerRecordSeedingIgnoresThreadCount) {
  const Fixture s = MakeSetup(7, 5, 150);
  const SensitiveList sensitive = Select(s.importance, 60);
  SanitizerConfig config;
  config.seeding = SeedingMode::kPerRecord;
  config.seed = 31;
  config.threads = 1;
  ASSERT_OK_AND_ASSIGN(SanitizeResult single, RunOn(s, sensitive, config));
  config.threads = 7;
  ASSERT_OK_AND_ASSIGN(SanitizeResult pooled, RunOn(s, sensitive, config));
  EXPECT_EQ(Serialized(single.doc), Serialized(pooled.doc));
  EXPECT_EQ(single.report, pooled.report);
  EXPECT_TRUE(pooled.report.Reconciles());

  // Record r uses seed ^ r.
  for (int r : {0, 1, 17, 149}) {
    Fixture one = s;
    one.doc.records = {s.doc.records[r]};
    SanitizerConfig sequential;
    sequential.seed = config.seed ^ static_cast<uint64_t>(r);
    ASSERT_OK_AND_ASSIGN(SanitizeResult alone,
                         RunOn(one, Select({s.importance[r]}, 60), sequential));
    EXPECT_EQ(alone.doc.records[0].texts, single.doc.records[r].texts) << r;
  }
}

TEST(SanitizerTest, PairRecordsKeepBothFields) {
  std::mt19937_64 rng(8);
  const testing::Instance instance = testing::WordInstance(rng, AlphabeticWords(), 8);
  const MappingCache tables = testing::BuildTables(instance, 3, Metric::kCosine).value();
  const Document doc = Corpus(
      "index\tquestion\tsentence\tlabel\n0\tis the film good?\tthe plot is slow.\t1\n");
  SanitizerConfig config;
  config.epsilon = 0.0;
  ASSERT_OK_AND_ASSIGN(
      SanitizeResult result,
      Sanitize(doc, config, tables.table, tables.scores, AllPositions(doc)));
  ASSERT_EQ(result.doc.records[0].texts.size(), 2u);
  EXPECT_EQ(result.report.tokens_total, 10);
  EXPECT_EQ(result.report.tokens_sensitive_oov, 2);
  for (const auto& sp : result.sampled[0]) EXPECT_NE(sp.position, 5);
}

TEST(SanitizerTest, Errors) {
  const Fixture s = MakeSetup(9, 5, 10);
  SanitizerConfig config;
  config.epsilon = -1;
  EXPECT_FALSE(RunOn(s, SensitiveList::Empty(), config).ok());

  config = SanitizerConfig();
  config.seeding = SeedingMode::kPerRecord;
  config.strategy = Strategy::kConservative;
  config.cache_scope = CacheScope::kDocument;
  EXPECT_FALSE(RunOn(s, SensitiveList::Empty(), config).ok());

  std::vector<ImportanceRecord> foreign = {{"zzz", {"film"}, {1.0}, false}};
  EXPECT_THAT(RunOn(s, Select(foreign, 100), SanitizerConfig()).status().message(),
              HasSubstr("'zzz'"));

  std::vector<ImportanceRecord> shifted = s.importance;
  for (auto& record : shifted) {
    if (!record.tokens.empty()) {
      record.tokens[0] = "zebra";
      break;
    }
  }
  EXPECT_THAT(RunOn(s, Select(shifted, 100), SanitizerConfig()).status().message(),
              HasSubstr("'zebra'"));

  const MappingCache other = NameTables(2);
  EXPECT_FALSE(Sanitize(s.doc, SanitizerConfig(), s.tables.table, other.scores,
                        SensitiveList::Empty())
                   .ok());
}

TEST(SanitizationReportTest, Reconciles) {
  SanitizationReport report{10, 8, 5, 1, 3, 1, 6};
  EXPECT_TRUE(report.Reconciles());
  report.tokens_perturbed = 4;
  EXPECT_FALSE(report.Reconciles());
  SanitizationReport sum = SanitizationReport{10, 8, 5, 1, 3, 1, 6};
  sum += SanitizationReport{2, 2, 2, 0, 1, 1, 0};
  EXPECT_EQ(sum, (SanitizationReport{12, 10, 7, 1, 4, 2, 6}));
}

TEST(NamesTest, RoundTrip) {
  for (Strategy s : {Strategy::kAggressive, Strategy::kConservative}) {
    EXPECT_EQ(ParseStrategy(StrategyName(s)).value(), s);
  }
  for (CacheScope s : {CacheScope::kRecord, CacheScope::kDocument}) {
    EXPECT_EQ(ParseCacheScope(CacheScopeName(s)).value(), s);
  }
  for (SeedingMode s : {SeedingMode::kSequential, SeedingMode::kPerRecord}) {
    EXPECT_EQ(ParseSeedingMode(SeedingModeName(s)).value(), s);
  }
  EXPECT_FALSE(ParseStrategy("gentle").ok());
}

}  // namespace
}  // namespace textdp

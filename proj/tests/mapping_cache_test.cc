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

#include <random>
#include <string>
#include <vector>

#include "absl/strings/str_replace.h"
#include "fixtures.h"
#include "gtest/gtest.h"
#include "test_util.h"
#include "textdp/digest.h"
#include "textdp/embeddings.h"
#include "textdp/file_io.h"

namespace textdp {
namespace {

TEST(MappingCacheTest, RoundTripIsBitExact) {
  std::mt19937_64 rng(1);
  for (Metric metric : {Metric::kEuclidean, Metric::kCosine}) {
    const auto instance = testing::RandomInstance(rng, 37, 6, false);
    PivotPolicy pivot{PivotOrder::kSeededRandom, 99};
    ASSERT_OK_AND_ASSIGN(MappingTable table,
                         BuildMapping(instance.vocab, instance.matrix, 5, metric, pivot));
    table.set_source_digest(Sha256Hex("vectors"));
    ASSERT_OK_AND_ASSIGN(ScoringTable scores, BuildScores(table, instance.matrix));
    const std::string text = SerializeMappingCache(table, scores);
    ASSERT_OK_AND_ASSIGN(MappingCache cache, ParseMappingCache(text));
    EXPECT_EQ(cache.table.sets(), table.sets());
    EXPECT_EQ(cache.table.k(), 5);
    EXPECT_EQ(cache.table.metric(), metric);
    EXPECT_EQ(cache.table.pivot().order, PivotOrder::kSeededRandom);
    EXPECT_EQ(cache.table.pivot().seed, 99u);
    EXPECT_EQ(cache.table.source_digest(), Sha256Hex("vectors"));
    EXPECT_EQ(cache.table.vocab().tokens(), table.vocab().tokens());
    EXPECT_EQ(cache.scores, scores);
    EXPECT_EQ(SerializeMappingCache(cache.table, cache.scores), text);
  }
}

TEST(MappingCacheTest, FileAndDirectoryPaths) {
  std::mt19937_64 rng(2);
  const auto instance = testing::RandomInstance(rng, 12, 3, true);
  ASSERT_OK_AND_ASSIGN(MappingCache tables,
                       testing::BuildTables(instance, 4, Metric::kEuclidean));
  const std::string dir = testing::FreshTempDir("cache_paths");
  const std::string file = dir + "/" + std::string(kMappingCacheFileName);
  ASSERT_OK(WriteMappingCache(file, tables.table, tables.scores));
  ASSERT_OK_AND_ASSIGN(MappingCache by_file, ReadMappingCache(file));
  ASSERT_OK_AND_ASSIGN(MappingCache by_dir, ReadMappingCache(dir));
  EXPECT_EQ(by_file.scores, by_dir.scores);
  EXPECT_EQ(by_file.table.source_digest(), "");
  EXPECT_FALSE(ReadMappingCache(dir + "/nothing").ok());
}

TEST(MappingCacheTest, RebuildMatchesBundledCache) {
  const std::string embeddings = testing::DataPath("sample/embeddings.txt");
  ASSERT_OK_AND_ASSIGN(LoadedEmbeddings emb, LoadEmbeddings(embeddings));
  ASSERT_OK_AND_ASSIGN(MappingTable table,
                       BuildMapping(emb.vocab, emb.matrix, 5, Metric::kEuclidean));
  ASSERT_OK_AND_ASSIGN(std::string digest, Sha256File(embeddings));
  table.set_source_digest(digest);
  ASSERT_OK_AND_ASSIGN(ScoringTable scores, BuildScores(table, emb.matrix));
  ASSERT_OK_AND_ASSIGN(
      std::string bundled,
      ReadFileToString(testing::DataPath("sample/map_k5_euclidean/mapping.cache")));
  EXPECT_EQ(SerializeMappingCache(table, scores), bundled);
  EXPECT_EQ(table.sets().size(), 80u);
}

TEST(MappingCacheTest, RejectsDamagedFiles) {
  std::mt19937_64 rng(3);
  const auto instance = testing::RandomInstance(rng, 7, 2, true);
  ASSERT_OK_AND_ASSIGN(MappingCache tables,
                       testing::BuildTables(instance, 3, Metric::kEuclidean));
  const std::string good = SerializeMappingCache(tables.table, tables.scores);
  ASSERT_OK(ParseMappingCache(good).status());

  const std::vector<std::pair<std::string, std::string>> damage = {
      {"textdp-mapping-cache 1", "textdp-mapping-cache 2"},
      {"textdp-mapping-cache 1", "something-else 1"},
      {"k 3", "k x"},
      {"k 3", "k 4"},
      {"metric euclidean", "metric manhattan"},
      {"pivot_order file 0", "pivot_order sorted 0"},
      {"tokens 7", "tokens 8"},
      {"sets 3", "sets 2"},
      {"\nend\n", "\n"},
      {"scores\n", "scores\nzz "},
  };
  for (const auto& [from, to] : damage) {
    const std::string bad = absl::StrReplaceAll(good, {{from, to}});
    ASSERT_NE(bad, good) << from;
    EXPECT_FALSE(ParseMappingCache(bad).ok()) << from << " -> " << to;
  }
  EXPECT_FALSE(ParseMappingCache("").ok());
  EXPECT_FALSE(ParseMappingCache(good.substr(0, good.size() / 2)).ok());
}

}  // namespace
}  // namespace textdp

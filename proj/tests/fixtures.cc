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

#include "fixtures.h"

#include <algorithm>
#include <utility>

#include "absl/strings/str_cat.h"
#include "textdp/mapping.h"
#include "textdp/scoring.h"
#include "textdp/status_macros.h"

namespace textdp {
namespace testing {
namespace {

Instance FromPoints(std::vector<std::string> tokens,
                    std::vector<oracle::Point> points) {
  Instance instance;
  instance.vocab = Vocabulary::FromTokens(std::move(tokens)).value();
  const int dim = points.empty() ? 0 : static_cast<int>(points[0].size());
  std::vector<double> flat;
  for (const auto& p : points) flat.insert(flat.end(), p.begin(), p.end());
  instance.matrix = EmbeddingMatrix(dim, std::move(flat));
  instance.points = std::move(points);
  return instance;
}

}  // namespace

Instance RandomInstance(std::mt19937_64& rng, int n, int dim, bool integer_grid) {
  std::vector<oracle::Point> points(n, oracle::Point(dim));
  std::uniform_int_distribution<int> cell(-3, 3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& p : points) {
    for (double& v : p) v = integer_grid ? cell(rng) : gauss(rng);
    // Cosine needs a direction.
    if (std::all_of(p.begin(), p.end(), [](double v) { return v == 0.0; })) {
      p[0] = 1.0;
    }
  }
  if (!integer_grid && n > 3) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int d = 0; d < n / 10 + 1; ++d) points[pick(rng)] = points[pick(rng)];
  }
  std::vector<std::string> tokens;
  for (int i = 0; i < n; ++i) tokens.push_back(absl::StrCat("w", i));
  return FromPoints(std::move(tokens), std::move(points));
}

Instance WordInstance(std::mt19937_64& rng, const std::vector<std::string>& words,
                      int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<oracle::Point> points(words.size(), oracle::Point(dim));
  for (auto& p : points) {
    for (double& v : p) v = gauss(rng);
  }
  return FromPoints(words, std::move(points));
}

absl::StatusOr<MappingCache> BuildTables(const Instance& instance, int k,
                                         Metric metric) {
  ASSIGN_OR_RETURN(MappingTable table,
                   BuildMapping(instance.vocab, instance.matrix, k, metric));
  ASSIGN_OR_RETURN(ScoringTable scores, BuildScores(table, instance.matrix));
  return MappingCache{std::move(table), std::move(scores)};
}

const std::vector<std::string>& SyntheticWords() {
  static const auto* words = new std::vector<std::string>{
      "the",   "a",     "film",  "story", "cast",   "plot",  "good",  "bad",
      "great", "dull",  "funny", "slow",  "smart",  "warm",  "long",  "music",
      "scene", "actor", "ends",  "works", "never",  "often", "truly", "heart",
      "voice", "joke",  "bored", "fresh", "honest", "lazy",  "bold",  "sweet",
      "and",   "is",    "of",    "it",    "with",   "to",    "for",   "not",
      ",",     ".",     "!",     "?"};
  return *words;
}

std::string SyntheticTsv(std::mt19937_64& rng, int records, int min_len,
                         int max_len) {
  const auto& words = SyntheticWords();
  std::uniform_int_distribution<int> length(min_len, max_len);
  std::uniform_int_distribution<size_t> word(0, words.size() - 1);
  std::string out = "sentence\tlabel\n";
  for (int r = 0; r < records; ++r) {
    const int n = length(rng);
    std::string sentence;
    for (int i = 0; i < n; ++i) {
      absl::StrAppend(&sentence, i == 0 ? "" : " ", words[word(rng)]);
    }
    absl::StrAppend(&out, sentence, "\t", r % 2, "\n");
  }
  return out;
}

}  // namespace testing
}  // namespace textdp

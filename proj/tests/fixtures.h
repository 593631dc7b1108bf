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

// Seeded generators for property tests and the acceptance suite.

#ifndef TEXTDP_TESTS_FIXTURES_H_
#define TEXTDP_TESTS_FIXTURES_H_

#include <random>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "oracles.h"
#include "textdp/corpus.h"
#include "textdp/embeddings.h"
#include "textdp/mapping_cache.h"

namespace textdp {
namespace testing {

struct Instance {
  Vocabulary vocab;
  EmbeddingMatrix matrix;
  std::vector<oracle::Point> points;
};

// Tokens "w0".."w{n-1}". With `integer_grid` coordinates are small integers,
// which makes exact distance ties common; otherwise they are Gaussian and a
// few rows are duplicated so that ties still occur.
Instance RandomInstance(std::mt19937_64& rng, int n, int dim, bool integer_grid);

// Instance whose tokens are the given words.
Instance WordInstance(std::mt19937_64& rng, const std::vector<std::string>& words,
                      int dim);

absl::StatusOr<MappingCache> BuildTables(const Instance& instance, int k,
                                         Metric metric);

// Words used by SyntheticCorpus; also a convenient vocabulary.
const std::vector<std::string>& SyntheticWords();

// Single-sentence TSV corpus (sentence, label) of `records` rows with
// between `min_len` and `max_len` words drawn from SyntheticWords().
std::string SyntheticTsv(std::mt19937_64& rng, int records, int min_len,
                         int max_len);

}  // namespace testing
}  // namespace textdp

#endif  // TEXTDP_TESTS_FIXTURES_H_

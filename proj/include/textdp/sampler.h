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

// Exponential-mechanism sampling over a token's output set:
//   Pr[y | x] = exp(eps * u(x, y) / (2 * du)) / Z(x),   du = 1.

#ifndef TEXTDP_SAMPLER_H_
#define TEXTDP_SAMPLER_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace textdp {

struct SamplerConfig {
  double epsilon = 0.0;
  uint64_t seed = 0;
};

// epsilon must be finite and >= 0.
absl::Status ValidateEpsilon(double epsilon);

struct TokenDistribution {
  // Vocabulary ordinals, in output-set order.
  std::vector<int> support;
  std::vector<double> probs;
};

// Natural-log probabilities, computed with the row maximum subtracted before
// exponentiation. Exact ratios survive even where probabilities underflow.
std::vector<double> LogProbabilities(std::span<const double> scores,
                                     double epsilon);

TokenDistribution Distribution(std::span<const double> scores,
                               std::span<const int> support, double epsilon);

// Seeded 64-bit Mersenne Twister yielding 53-bit uniforms in [0, 1). The
// uniform construction is spelled out so streams replay identically across
// standard libraries.
class TokenRng {
 public:
  explicit TokenRng(uint64_t seed) : engine_(seed) {}

  double NextUniform() {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  uint64_t draws() const { return draws_; }

 private:
  std::mt19937_64 engine_;
  uint64_t draws_ = 0;
};

// Inverse-CDF draw over `probs` in order. Consumes exactly one uniform.
int SampleIndex(std::span<const double> probs, TokenRng& rng);

// Returns the drawn support ordinal.
int Sample(const TokenDistribution& dist, TokenRng& rng);

// max_y Pr[M(a) = y] / Pr[M(b) = y] for two inputs sharing one output set.
// Fails when the supports differ or a row length does not match its support.
absl::StatusOr<double> AuditDp(std::span<const double> scores_a,
                               std::span<const int> support_a,
                               std::span<const double> scores_b,
                               std::span<const int> support_b, double epsilon);

}  // namespace textdp

#endif  // TEXTDP_SAMPLER_H_

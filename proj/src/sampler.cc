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

#include "textdp/sampler.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "textdp/scoring.h"

namespace textdp {

absl::Status ValidateEpsilon(double epsilon) {
  if (!std::isfinite(epsilon) || epsilon < 0.0) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be finite and >= 0, got ", epsilon));
  }
  return absl::OkStatus();
}

std::vector<double> LogProbabilities(std::span<const double> scores,
                                     double epsilon) {
  const double scale = epsilon / (2.0 * ScoringTable::kDeltaU);
  std::vector<double> logits(scores.size());
  for (size_t i = 0; i < scores.size(); ++i) logits[i] = scale * scores[i];
  if (logits.empty()) return logits;
  const double max = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double l : logits) sum += std::exp(l - max);
  const double log_z = max + std::log(sum);
  for (double& l : logits) l -= log_z;
  return logits;
}

TokenDistribution Distribution(std::span<const double> scores,
                               std::span<const int> support, double epsilon) {
  TokenDistribution dist;
  dist.support.assign(support.begin(), support.end());
  dist.probs = LogProbabilities(scores, epsilon);
  for (double& p : dist.probs) p = std::exp(p);
  return dist;
}

int SampleIndex(std::span<const double> probs, TokenRng& rng) {
  const double u = rng.NextUniform();
  double cumulative = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    cumulative += probs[i];
    if (u < cumulative) return static_cast<int>(i);
  }
  // Rounding can leave the total a hair under 1; the residue belongs to the
  // last outcome with positive mass.
  for (size_t i = probs.size(); i-- > 0;) {
    if (probs[i] > 0.0) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

int Sample(const TokenDistribution& dist, TokenRng& rng) {
  return dist.support[SampleIndex(dist.probs, rng)];
}

absl::StatusOr<double> AuditDp(std::span<const double> scores_a,
                               std::span<const int> support_a,
                               std::span<const double> scores_b,
                               std::span<const int> support_b, double epsilon) {
  if (!std::equal(support_a.begin(), support_a.end(), support_b.begin(),
                  support_b.end())) {
    return absl::InvalidArgumentError(
        "audited inputs do not share an output set");
  }
  if (scores_a.size() != support_a.size() ||
      scores_b.size() != support_b.size()) {
    return absl::InvalidArgumentError("score row does not match its output set");
  }
  const std::vector<double> log_a = LogProbabilities(scores_a, epsilon);
  const std::vector<double> log_b = LogProbabilities(scores_b, epsilon);
  double worst = -INFINITY;
  for (size_t i = 0; i < log_a.size(); ++i) {
    worst = std::max(worst, log_a[i] - log_b[i]);
  }
  return log_a.empty() ? 1.0 : std::exp(worst);
}

}  // namespace textdp

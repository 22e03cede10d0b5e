// Copyright 2026 The knitlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KNITLAB_EXPERIMENTS_H_
#define KNITLAB_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knitlab/closeknit.h"
#include "knitlab/diffusion.h"
#include "knitlab/graph.h"

namespace knitlab {

using BigRational = boost::multiprecision::cpp_rational;

inline constexpr int kMaxAutomorphismOrder = 10;

// |Aut(H)| by backtracking over vertex permutations; |V(H)| <= 10.
int64_t AutomorphismCount(const LabeledGraph& pattern);

struct MomentReport {
  // C(n,k) 2^{-C(k,2)}: expected rank-relabelled (labelled) copies in G(n,1/2).
  BigRational expected_labelled;
  // C(n,k) (k!/|Aut H|) 2^{-C(k,2)}: expected induced copies up to isomorphism.
  BigRational expected_isomorphic;
  int64_t aut_count = 0;
};

MomentReport ExpectedOccurrences(int n, const LabeledGraph& pattern);

// Overwrites the pairs inside `subset` so that it becomes an ordered
// occurrence of `pattern`; all other pairs are untouched.
LabeledGraph PlantOccurrence(const LabeledGraph& graph,
                             const LabeledGraph& pattern,
                             const VertexSubset& subset);

// G(n,p) conditioned on containing no induced copy of `pattern`, by
// rejection. Attempt i uses seed DeriveSeed(seed, i).
LabeledGraph SamplePatternFree(int n, double p, const LabeledGraph& pattern,
                               uint64_t seed, int max_attempts = 10000);

struct ContainmentReport {
  int trials = 0;
  double mean = 0.0;      // induced copies (distinct vertex sets) per sample
  double variance = 0.0;  // unbiased sample variance
  double frequency = 0.0; // share of samples with at least one copy
  std::vector<int64_t> counts;
};

// Sample i is G(n, p) with seed DeriveSeed(seed, i).
ContainmentReport ContainmentExperiment(int n, const LabeledGraph& pattern,
                                        int trials, uint64_t seed,
                                        int jobs = 1, double p = 0.5);

struct SweepRow {
  int level = 0;
  int k = 0;
  int n = 0;
  std::optional<int64_t> gain_ordered;    // absent when n < k
  std::optional<int64_t> gain_unordered;
  double ordered_bound = 0.0;    // 2^{(k-1)/2}
  double deficient_bound = 0.0;  // 2^{k(k-1)/(2(k+1))}
  // Share of G(n,1/2) samples containing an induced S_l; absent when the
  // search budget would be exceeded.
  std::optional<double> containment_frequency;
  int samples = 0;
};

struct SweepOptions {
  int trials = 200;
  uint64_t seed = 0;
  int jobs = 1;
  // Skip sampling when trials * ExpectedSearchNodes(n, k) exceeds this.
  double node_budget = 5e7;
};

// One row per (level, n) with n in [n_min, n_max]. Cell (l, n) samples with
// master seed DeriveSeed(seed, l, n), so any row can be reproduced alone.
std::vector<SweepRow> ThresholdSweep(const std::vector<int>& levels, int n_min,
                                     int n_max, const SweepOptions& options);

std::string SweepCsv(const std::vector<SweepRow>& rows);

enum class InitMode { kTopTriangle, kAll, kNone };

struct LinkRow {
  int level = 0;
  Rational threshold;
  std::optional<int> min_k;
  std::optional<double> median_hitting;
  double success_rate = 0.0;
};

struct LinkOptions {
  int trials = 100;
  int jobs = 1;
  int k_cap = 8;
  // horizon = horizon_per_vertex * n_l
  int64_t horizon_per_vertex = 200;
  InitMode init = InitMode::kTopTriangle;
};

// Per level: the game's threshold, the smallest k making S_l
// (threshold, k)-close-knit, and hitting statistics from `base` (epsilon,
// schedule, seed) with init and horizon set per level.
std::vector<LinkRow> CloseKnitDiffusionLink(const std::vector<int>& levels,
                                            const CoordinationGame& game,
                                            const DiffusionConfig& base,
                                            const LinkOptions& options);

std::string LinkCsv(const std::vector<LinkRow>& rows);

}  // namespace knitlab

#endif  // KNITLAB_EXPERIMENTS_H_

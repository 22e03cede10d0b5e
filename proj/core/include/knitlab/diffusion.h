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

#ifndef KNITLAB_DIFFUSION_H_
#define KNITLAB_DIFFUSION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knitlab/closeknit.h"
#include "knitlab/graph.h"
#include "knitlab/random.h"

namespace knitlab {

// Symmetric 2x2 coordination game, row player's payoffs:
//        A   B
//   A    a   c
//   B    d   b
struct CoordinationGame {
  Rational a;
  Rational b;
  Rational c;
  Rational d;
};

// Fraction of A-neighbours at which A becomes a best response:
// (b-c) / ((a-d) + (b-c)). Rejects games where all-A or all-B is not a
// strict equilibrium. A is risk dominant iff the threshold is below 1/2.
Rational RiskThreshold(const CoordinationGame& game);
bool IsARiskDominant(const CoordinationGame& game);

enum class Strategy : uint8_t { kB = 0, kA = 1 };
enum class Schedule { kUniformRandom, kRoundRobin };

std::string_view ScheduleName(Schedule schedule);
Schedule ParseSchedule(std::string_view text);

struct DiffusionConfig {
  // Probability that a revising vertex picks a uniformly random strategy.
  double epsilon = 0.0;
  VertexSubset init_adopters;
  int64_t horizon = 1000;
  uint64_t seed = 0;
  // Round-robin revises 1, 2, ..., n, 1, 2, ...
  Schedule schedule = Schedule::kUniformRandom;
  // Adoption share that counts as success in hitting-time statistics.
  double success_fraction = 0.99;
};

struct DiffusionState {
  std::vector<Strategy> strategy;  // indexed by label - 1
  int64_t t = 0;

  int adopters() const;
  bool AllA() const;
};

DiffusionState InitialState(const LabeledGraph& graph,
                            const DiffusionConfig& config);

// One revision of vertex v. With probability 1 - epsilon, v plays A iff the
// share of A-neighbours is at least the threshold (ties adopt A); otherwise
// it plays a fair coin. Draws from `rng` only when epsilon > 0.
DiffusionState Revise(const DiffusionState& state, Vertex v,
                      const LabeledGraph& graph, const CoordinationGame& game,
                      const DiffusionConfig& config, Rng& rng);

struct Trace {
  // adopters[t] = number of A-players after t revisions; adopters[0] is the
  // initial state.
  std::vector<int> adopters;
  // First t with everyone on A (stops the run).
  std::optional<int64_t> hit_all;
  // First t with at least success_fraction * n adopters.
  std::optional<int64_t> hit_success;
};

// Deterministic given (graph, game, config). Rejects graphs with isolated
// vertices.
Trace Run(const LabeledGraph& graph, const CoordinationGame& game,
          const DiffusionConfig& config);

std::string TraceCsv(const Trace& trace);

struct HittingStats {
  int trials = 0;
  int successes = 0;
  double success_rate = 0.0;
  // Over successful trials; type-7 (linear interpolation) quantiles.
  std::optional<double> median;
  std::optional<double> lower_quartile;
  std::optional<double> upper_quartile;
  // Per trial, in trial order.
  std::vector<std::optional<int64_t>> hitting_times;
};

// Trial i runs with seed DeriveSeed(config.seed, i). `jobs` only changes
// how trials are spread over threads.
HittingStats HittingTimeStats(const LabeledGraph& graph,
                              const CoordinationGame& game,
                              const DiffusionConfig& config, int trials,
                              int jobs = 1);

// Linear-interpolation quantile of sorted data, q in [0,1].
double Quantile(const std::vector<double>& sorted, double q);

}  // namespace knitlab

#endif  // KNITLAB_DIFFUSION_H_

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

#include "knitlab/diffusion.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace knitlab {
namespace {

class Simulator {
 public:
  Simulator(const LabeledGraph& graph, const CoordinationGame& game,
            const DiffusionConfig& config)
      : graph_(graph), threshold_(RiskThreshold(game)), config_(config) {
    if (!(config.epsilon >= 0.0 && config.epsilon < 1.0)) {
      throw Error("diffusion: epsilon must lie in [0,1)");
    }
  }

  // Returns the new strategy of v.
  Strategy Decide(const std::vector<Strategy>& strategy, Vertex v, Rng& rng) const {
    const auto nbrs = graph_.neighbors(v);
    if (nbrs.empty()) {
      throw Error("diffusion: vertex " + std::to_string(v) +
                  " is isolated; best response is undefined");
    }
    if (config_.epsilon > 0.0 && UnitDraw(rng) < config_.epsilon) {
      return (rng() >> 63) ? Strategy::kA : Strategy::kB;
    }
    int64_t on_a = 0;
    for (Vertex w : nbrs) on_a += strategy[w - 1] == Strategy::kA;
    // on_a / deg >= p / q
    const int64_t deg = static_cast<int64_t>(nbrs.size());
    return on_a * threshold_.denominator() >= threshold_.numerator() * deg
               ? Strategy::kA
               : Strategy::kB;
  }

 private:
  const LabeledGraph& graph_;
  Rational threshold_;
  const DiffusionConfig& config_;
};

}  // namespace

Rational RiskThreshold(const CoordinationGame& game) {
  if (game.a <= game.d || game.b <= game.c) {
    throw Error("game: need a > d and b > c so that all-A and all-B are strict "
                "equilibria");
  }
  return (game.b - game.c) / ((game.a - game.d) + (game.b - game.c));
}

bool IsARiskDominant(const CoordinationGame& game) {
  return RiskThreshold(game) < Rational(1, 2);
}

std::string_view ScheduleName(Schedule schedule) {
  return schedule == Schedule::kRoundRobin ? "round-robin" : "uniform-random";
}

Schedule ParseSchedule(std::string_view text) {
  if (text == "round-robin") return Schedule::kRoundRobin;
  if (text == "uniform-random") return Schedule::kUniformRandom;
  throw Error("schedule must be 'round-robin' or 'uniform-random', got '" +
              std::string(text) + "'");
}

int DiffusionState::adopters() const {
  return static_cast<int>(std::count(strategy.begin(), strategy.end(), Strategy::kA));
}

bool DiffusionState::AllA() const {
  return std::all_of(strategy.begin(), strategy.end(),
                     [](Strategy s) { return s == Strategy::kA; });
}

DiffusionState InitialState(const LabeledGraph& graph,
                            const DiffusionConfig& config) {
  config.init_adopters.CheckWithin(graph.order());
  DiffusionState state;
  state.strategy.assign(graph.order(), Strategy::kB);
  for (Vertex v : config.init_adopters) state.strategy[v - 1] = Strategy::kA;
  return state;
}

DiffusionState Revise(const DiffusionState& state, Vertex v,
                      const LabeledGraph& graph, const CoordinationGame& game,
                      const DiffusionConfig& config, Rng& rng) {
  Simulator sim(graph, game, config);
  DiffusionState next = state;
  next.strategy[v - 1] = sim.Decide(state.strategy, v, rng);
  ++next.t;
  return next;
}

Trace Run(const LabeledGraph& graph, const CoordinationGame& game,
          const DiffusionConfig& config) {
  if (config.horizon <= 0) throw Error("diffusion: horizon must be positive");
  if (graph.order() == 0) throw Error("diffusion: graph has no vertices");
  if (graph.HasIsolatedVertex()) {
    throw Error("diffusion: graph has an isolated vertex; the model assumes none");
  }
  Simulator sim(graph, game, config);
  DiffusionState state = InitialState(graph, config);
  Rng rng(config.seed);
  const int n = graph.order();
  const int64_t success_count = static_cast<int64_t>(
      std::ceil(config.success_fraction * n - 1e-9));

  Trace trace;
  int adopters = state.adopters();
  trace.adopters.push_back(adopters);
  auto record = [&](int64_t t) {
    if (!trace.hit_success && adopters >= success_count) trace.hit_success = t;
    if (adopters == n) trace.hit_all = t;
  };
  record(0);
  for (int64_t t = 1; t <= config.horizon && !trace.hit_all; ++t) {
    const Vertex v = config.schedule == Schedule::kRoundRobin
                         ? static_cast<Vertex>((t - 1) % n) + 1
                         : static_cast<Vertex>(BoundedDraw(rng, n)) + 1;
    const Strategy before = state.strategy[v - 1];
    const Strategy after = sim.Decide(state.strategy, v, rng);
    state.strategy[v - 1] = after;
    adopters += (after == Strategy::kA) - (before == Strategy::kA);
    trace.adopters.push_back(adopters);
    record(t);
  }
  return trace;
}

std::string TraceCsv(const Trace& trace) {
  std::ostringstream out;
  out << "revision,adopter_count\n";
  for (size_t t = 0; t < trace.adopters.size(); ++t) {
    out << t << ',' << trace.adopters[t] << '\n';
  }
  return out.str();
}

double Quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw Error("quantile of empty sample");
  const double h = (sorted.size() - 1) * q;
  const size_t lo = static_cast<size_t>(std::floor(h));
  const size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
}

HittingStats HittingTimeStats(const LabeledGraph& graph,
                              const CoordinationGame& game,
                              const DiffusionConfig& config, int trials,
                              int jobs) {
  if (trials < 1) throw Error("hitting stats: trials must be >= 1");
  RiskThreshold(game);
  HittingStats stats;
  stats.trials = trials;
  stats.hitting_times.resize(trials);
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < trials;) {
      DiffusionConfig trial = config;
      trial.seed = DeriveSeed(config.seed, static_cast<uint64_t>(i));
      try {
        stats.hitting_times[i] = Run(graph, game, trial).hit_success;
      } catch (const Error& e) {
        if (!failed.exchange(true)) failure = e.what();
        return;
      }
    }
  };
  const int threads = std::max(1, std::min(jobs, trials));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed) throw Error(failure);

  std::vector<double> times;
  for (const auto& h : stats.hitting_times) {
    if (h) times.push_back(static_cast<double>(*h));
  }
  std::sort(times.begin(), times.end());
  stats.successes = static_cast<int>(times.size());
  stats.success_rate = static_cast<double>(stats.successes) / trials;
  if (!times.empty()) {
    stats.median = Quantile(times, 0.5);
    stats.lower_quartile = Quantile(times, 0.25);
    stats.upper_quartile = Quantile(times, 0.75);
  }
  return stats;
}

}  // namespace knitlab

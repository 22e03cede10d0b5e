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

#include <gtest/gtest.h>

#include <algorithm>

#include "knitlab/diffusion.h"
#include "knitlab/random.h"
#include "knitlab/sierpinski.h"

namespace knitlab {
namespace {

CoordinationGame Game(int a, int b, int c, int d) {
  return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

DiffusionConfig RoundRobin(VertexSubset init, int64_t horizon) {
  DiffusionConfig config;
  config.init_adopters = std::move(init);
  config.horizon = horizon;
  config.schedule = Schedule::kRoundRobin;
  return config;
}

TEST(Threshold, Examples) {
  EXPECT_EQ(RiskThreshold(Game(2, 1, 0, 0)), Rational(1, 3));
  EXPECT_EQ(RiskThreshold(Game(1, 1, 0, 0)), Rational(1, 2));
  EXPECT_EQ(RiskThreshold(Game(3, 1, 0, 0)), Rational(1, 4));
  EXPECT_TRUE(IsARiskDominant(Game(2, 1, 0, 0)));
  EXPECT_FALSE(IsARiskDominant(Game(1, 1, 0, 0)));
  EXPECT_THROW(RiskThreshold(Game(0, 1, 0, 0)), Error);
  EXPECT_THROW(RiskThreshold(Game(1, 0, 0, 0)), Error);
}

TEST(Revise, BestResponseAndTies) {
  const LabeledGraph g = SierpinskiGraph::Build(2).graph();
  const CoordinationGame game = Game(2, 1, 0, 0);
  Rng rng(1);
  // Vertex 4 has neighbours 2 and 5.
  DiffusionState s = InitialState(g, RoundRobin(VertexSubset({2}), 10));
  EXPECT_EQ(Revise(s, 4, g, game, RoundRobin({}, 10), rng).strategy[3], Strategy::kA);
  s = InitialState(g, RoundRobin(VertexSubset({1}), 10));
  EXPECT_EQ(Revise(s, 4, g, game, RoundRobin({}, 10), rng).strategy[3], Strategy::kB);
  // 1 of 3 on a threshold of exactly 1/3 adopts.
  const LabeledGraph star(4, {{1, 2}, {1, 3}, {1, 4}});
  s = InitialState(star, RoundRobin(VertexSubset({2}), 10));
  const DiffusionState next = Revise(s, 1, star, game, RoundRobin({}, 10), rng);
  EXPECT_EQ(next.strategy[0], Strategy::kA);
  EXPECT_EQ(next.t, 1);
  EXPECT_THROW(Revise(InitialState(LabeledGraph(2), RoundRobin({}, 1)), 1,
                      LabeledGraph(2), game, RoundRobin({}, 1), rng),
               Error);
}

TEST(Run, LevelTwoSweep) {
  const LabeledGraph g = SierpinskiGraph::Build(2).graph();
  const Trace trace = knitlab::Run(g, Game(2, 1, 0, 0), RoundRobin(VertexSubset({1, 2, 3}), 60));
  EXPECT_EQ(trace.adopters, (std::vector<int>{3, 3, 3, 3, 4, 5, 6}));
  EXPECT_EQ(trace.hit_all, 6);
}

TEST(Run, AbsorbingStates) {
  const LabeledGraph g = SierpinskiGraph::Build(3).graph();
  const Trace none = knitlab::Run(g, Game(2, 1, 0, 0), RoundRobin({}, 100));
  EXPECT_FALSE(none.hit_all.has_value());
  EXPECT_EQ(none.adopters.back(), 0);
  const Trace all =
      knitlab::Run(g, Game(2, 1, 0, 0), RoundRobin(VertexSubset::Range(1, 15), 100));
  EXPECT_EQ(all.hit_all, 0);
}

TEST(Run, CompleteGraphMajority) {
  const LabeledGraph g = LabeledGraph::Complete(8);
  const Trace trace =
      knitlab::Run(g, Game(2, 1, 0, 0), RoundRobin(VertexSubset::Range(1, 5), 100));
  ASSERT_TRUE(trace.hit_all.has_value());
  EXPECT_LE(*trace.hit_all, 8);
}

// Round-robin from one elementary triangle: the A-set only grows sweep by
// sweep. At threshold 1/4 it covers S_l; at 1/3 a degree-4 vertex needs two
// A-neighbours, so it fills the enclosing level-2 sub-gasket and stops.
DiffusionState SweepToFixpoint(const SierpinskiGraph& s, const CoordinationGame& game,
                               const VertexSubset& seed) {
  const int n = s.graph().order();
  const DiffusionConfig config = RoundRobin(seed, 0);
  DiffusionState state = InitialState(s.graph(), config);
  Rng rng(0);
  for (int sweep = 0; sweep <= n; ++sweep) {
    const std::vector<Strategy> before = state.strategy;
    for (Vertex v = 1; v <= n; ++v) state = Revise(state, v, s.graph(), game, config, rng);
    for (int i = 0; i < n; ++i) {
      if (before[i] == Strategy::kA) EXPECT_EQ(state.strategy[i], Strategy::kA);
    }
    if (state.strategy == before) break;
  }
  return state;
}

TEST(Run, TriangleSeedsSpreadMonotonically) {
  for (int l = 1; l <= 4; ++l) {
    const SierpinskiGraph s = SierpinskiGraph::Build(l);
    const auto blocks = l >= 2 ? s.Subgaskets(2) : std::vector<VertexSubset>{};
    for (const auto& tri : s.Subgaskets(1)) {
      SCOPED_TRACE("level " + std::to_string(l) + " seed " + FormatSubset(tri));
      EXPECT_TRUE(SweepToFixpoint(s, Game(3, 1, 0, 0), tri).AllA());

      const DiffusionState third = SweepToFixpoint(s, Game(2, 1, 0, 0), tri);
      if (l <= 2) {
        EXPECT_TRUE(third.AllA());
        continue;
      }
      std::vector<Vertex> adopted;
      for (Vertex v = 1; v <= s.graph().order(); ++v) {
        if (third.strategy[v - 1] == Strategy::kA) adopted.push_back(v);
      }
      const auto home = std::find_if(blocks.begin(), blocks.end(), [&](const auto& b) {
        return b.contains(tri[0]) && b.contains(tri[1]) && b.contains(tri[2]);
      });
      ASSERT_NE(home, blocks.end());
      EXPECT_EQ(VertexSubset(adopted), *home);
    }
  }
}

TEST(Run, DeterministicPerSeed) {
  const LabeledGraph g = SierpinskiGraph::Build(3).graph();
  DiffusionConfig config;
  config.epsilon = 0.05;
  config.init_adopters = VertexSubset({1, 2, 3});
  config.horizon = 2000;
  config.seed = 17;
  const Trace a = knitlab::Run(g, Game(2, 1, 0, 0), config);
  const Trace b = knitlab::Run(g, Game(2, 1, 0, 0), config);
  EXPECT_EQ(a.adopters, b.adopters);
  // Scaling every payoff keeps the threshold and hence the trajectory.
  const Trace c = knitlab::Run(g, Game(6, 3, 0, 0), config);
  EXPECT_EQ(a.adopters, c.adopters);
}

TEST(Stats, JobsDoNotChangeResults) {
  const LabeledGraph g = SierpinskiGraph::Build(2).graph();
  DiffusionConfig config;
  config.epsilon = 0.02;
  config.init_adopters = VertexSubset({1, 2, 3});
  config.horizon = 1200;
  config.seed = 5;
  const HittingStats one = HittingTimeStats(g, Game(2, 1, 0, 0), config, 40, 1);
  const HittingStats three = HittingTimeStats(g, Game(2, 1, 0, 0), config, 40, 3);
  EXPECT_EQ(one.hitting_times, three.hitting_times);
  EXPECT_EQ(one.median, three.median);
  EXPECT_GE(one.success_rate, 0.9);
}

TEST(Stats, EmptyInitNeverSucceeds) {
  const LabeledGraph g = SierpinskiGraph::Build(2).graph();
  DiffusionConfig config;
  config.horizon = 100;
  const HittingStats s = HittingTimeStats(g, Game(2, 1, 0, 0), config, 10, 1);
  EXPECT_EQ(s.successes, 0);
  EXPECT_FALSE(s.median.has_value());
}

TEST(Quantile, TypeSeven) {
  const std::vector<double> v = {1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(Quantile(v, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(Quantile(v, 0.25), 1.75);
  EXPECT_DOUBLE_EQ(Quantile(v, 1.0), 4.0);
}

}  // namespace
}  // namespace knitlab

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

#include "knitlab/experiments.h"
#include "knitlab/induced_search.h"
#include "knitlab/patterns.h"
#include "knitlab/sierpinski.h"

namespace knitlab {
namespace {

TEST(Automorphisms, SmallGraphs) {
  EXPECT_EQ(AutomorphismCount(LabeledGraph::Complete(4)), 24);
  EXPECT_EQ(AutomorphismCount(CycleGraph(5)), 10);
  EXPECT_EQ(AutomorphismCount(PathGraph(4)), 2);
  EXPECT_EQ(AutomorphismCount(SierpinskiGraph::Build(2).graph()), 6);
  EXPECT_THROW(AutomorphismCount(SierpinskiGraph::Build(3).graph()), Error);
}

TEST(Moments, ExactValues) {
  const MomentReport k3 = ExpectedOccurrences(10, LabeledGraph::Complete(3));
  EXPECT_EQ(k3.expected_isomorphic, BigRational(15));
  const MomentReport s2 = ExpectedOccurrences(12, SierpinskiGraph::Build(2).graph());
  EXPECT_EQ(s2.aut_count, 6);
  EXPECT_EQ(s2.expected_isomorphic, BigRational(3465, 1024));
  EXPECT_EQ(s2.expected_labelled, BigRational(924, 32768));
}

TEST(Plant, CreatesOrderedOccurrence) {
  const LabeledGraph g = SampleGnp(20, 0.5, 3);
  const VertexSubset s({3, 5, 8, 11, 17, 20});
  const LabeledGraph s2 = SierpinskiGraph::Build(2).graph();
  const LabeledGraph h = PlantOccurrence(g, s2, s);
  EXPECT_TRUE(IsOrderedOccurrence(h, s, s2));
  for (const Edge& e : g.edges()) {
    if (!(s.contains(e.u) && s.contains(e.v))) EXPECT_TRUE(h.HasEdge(e.u, e.v));
  }
}

TEST(PatternFree, HasNoCopy) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const LabeledGraph g = SamplePatternFree(10, 0.3, LabeledGraph::Complete(3), seed);
    EXPECT_FALSE(ContainsInduced(g, LabeledGraph::Complete(3)));
  }
  EXPECT_THROW(SamplePatternFree(10, 1.0, LabeledGraph::Complete(3), 1, 5), Error);
}

TEST(Containment, DeterministicAcrossJobs) {
  const ContainmentReport a = ContainmentExperiment(10, LabeledGraph::Complete(3), 50, 9, 1);
  const ContainmentReport b = ContainmentExperiment(10, LabeledGraph::Complete(3), 50, 9, 4);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_DOUBLE_EQ(a.mean, b.mean);
}

TEST(Sweep, GainColumnMatchesCodec) {
  SweepOptions options;
  options.trials = 5;
  options.seed = 2;
  const auto rows = ThresholdSweep({2}, 5, 9, options);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].n, 5);
  EXPECT_FALSE(rows[0].gain_ordered.has_value());
  EXPECT_EQ(rows[2].gain_ordered, 2);
  EXPECT_EQ(rows[3].gain_ordered, 0);
  const std::string csv = SweepCsv(rows);
  EXPECT_EQ(csv, SweepCsv(ThresholdSweep({2}, 5, 9, options)));
}

}  // namespace
}  // namespace knitlab

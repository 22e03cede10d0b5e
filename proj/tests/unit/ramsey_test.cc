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
#include "knitlab/random.h"
#include "knitlab/ramsey.h"
#include "knitlab/sierpinski.h"

namespace knitlab {
namespace {

TEST(InducedSearch, CountsMatchFormulas) {
  EXPECT_EQ(CountInducedOccurrences(LabeledGraph::Complete(6), LabeledGraph::Complete(3)),
            20);
  EXPECT_EQ(CountInducedOccurrences(LabeledGraph::Complete(6), PathGraph(3)), 0);
  EXPECT_EQ(CountInducedOccurrences(CycleGraph(5), PathGraph(3)), 5);
  EXPECT_EQ(CountInducedOccurrences(SierpinskiGraph::Build(3).graph(),
                                    SierpinskiGraph::Build(2).graph()),
            3);
  EXPECT_FALSE(ContainsInduced(PathGraph(5), LabeledGraph::Complete(3)));
}

TEST(InducedSearch, AgreesWithBruteForce) {
  const LabeledGraph pattern = PathGraph(4);
  for (int t = 0; t < 15; ++t) {
    const LabeledGraph g = SampleGnp(9, 0.5, DeriveSeed(31, t));
    int64_t brute = 0;
    for (uint32_t mask = 0; mask < (1u << 9); ++mask) {
      if (__builtin_popcount(mask) != 4) continue;
      std::vector<Vertex> s;
      for (int v = 0; v < 9; ++v) {
        if (mask >> v & 1) s.push_back(v + 1);
      }
      const LabeledGraph h = InducedSubgraph(g, VertexSubset(s));
      if (CountInducedOccurrences(h, pattern) > 0) ++brute;
    }
    EXPECT_EQ(CountInducedOccurrences(g, pattern), brute);
  }
}

TEST(InducedSearch, LimitTruncatesDeterministically) {
  const auto all = FindInducedOccurrences(LabeledGraph::Complete(7),
                                          LabeledGraph::Complete(3));
  const auto some = FindInducedOccurrences(LabeledGraph::Complete(7),
                                           LabeledGraph::Complete(3), 5);
  ASSERT_EQ(all.size(), 35u);
  ASSERT_EQ(some.size(), 5u);
  for (size_t i = 0; i < some.size(); ++i) EXPECT_EQ(some[i], all[i]);
}

TEST(Host, K6IsHostForTriangle) {
  const HostCertificate c =
      IsHost(LabeledGraph::Complete(6), LabeledGraph::Complete(3));
  EXPECT_TRUE(c.verified);
  EXPECT_EQ(c.colorings_checked, 32768u);
  EXPECT_EQ(c.occurrences, 20);
  EXPECT_FALSE(c.witness.has_value());
}

TEST(Host, K5WitnessIsTwoPentagons) {
  const LabeledGraph k5 = LabeledGraph::Complete(5);
  const HostCertificate c = IsHost(k5, LabeledGraph::Complete(3));
  ASSERT_FALSE(c.verified);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_FALSE(HasMonoInduced(k5, *c.witness, LabeledGraph::Complete(3)));
  std::vector<Edge> red;
  std::vector<Edge> blue;
  for (int64_t i = 0; i < k5.size(); ++i) {
    (c.witness->of(i) == Color::kRed ? red : blue).push_back(k5.edges()[i]);
  }
  EXPECT_EQ(CountInducedOccurrences(LabeledGraph(5, red), CycleGraph(5)), 1);
  EXPECT_EQ(CountInducedOccurrences(LabeledGraph(5, blue), CycleGraph(5)), 1);

  // Exactly 12 of the 1024 colourings avoid a monochromatic triangle.
  int good = 0;
  for (uint32_t mask = 0; mask < 1024; ++mask) {
    std::vector<Color> colors;
    for (int i = 0; i < 10; ++i) colors.push_back(static_cast<Color>(mask >> i & 1));
    if (!HasMonoInduced(k5, TwoColoring(colors), LabeledGraph::Complete(3))) ++good;
  }
  EXPECT_EQ(good, 12);
}

TEST(Host, WitnessIndependentOfJobs) {
  const LabeledGraph host = SierpinskiGraph::Build(2).graph();
  const LabeledGraph k3 = LabeledGraph::Complete(3);
  const HostCertificate one = IsHost(host, k3, {1});
  const HostCertificate four = IsHost(host, k3, {4});
  EXPECT_EQ(one.verified, four.verified);
  EXPECT_EQ(one.colorings_checked, four.colorings_checked);
  EXPECT_EQ(one.witness, four.witness);
  const HostCertificate k5 = IsHost(LabeledGraph::Complete(5), k3, {3});
  EXPECT_EQ(k5.witness, IsHost(LabeledGraph::Complete(5), k3, {1}).witness);
}

TEST(Host, RejectsOversizedHosts) {
  EXPECT_THROW(IsHost(LabeledGraph::Complete(9), LabeledGraph::Complete(3)), Error);
}

TEST(Oracle, CompleteHostsGiveSix) {
  std::vector<LabeledGraph> hosts;
  for (int n = 2; n <= 7; ++n) hosts.push_back(LabeledGraph::Complete(n));
  const OracleResult r = InducedRamseyOracle(LabeledGraph::Complete(3), hosts);
  ASSERT_TRUE(r.found.has_value());
  EXPECT_EQ(hosts[*r.found].order(), 6);
}

TEST(Split, FastAndFaithfulAgree) {
  const LabeledGraph k3 = LabeledGraph::Complete(3);
  for (int t = 0; t < 10; ++t) {
    const LabeledGraph g1 = SamplePatternFree(6 + t % 5, 0.4, k3, DeriveSeed(41, t));
    const UnionConstruction u = ConstructUnion(g1, LabeledGraph::Complete(6));
    const SplitResult fast = SplitUnion(u.graph, k3, SplitMode::kFast);
    const SplitResult slow = SplitUnion(u.graph, k3, SplitMode::kProofFaithful);
    EXPECT_EQ(fast.g1_vertices, VertexSubset::Range(1, g1.order()));
    EXPECT_EQ(fast.g2_vertices, VertexSubset::Range(g1.order() + 1, g1.order() + 6));
    EXPECT_EQ(fast.g1_vertices, slow.g1_vertices);
    EXPECT_EQ(fast.g2_vertices, slow.g2_vertices);
  }
  EXPECT_EQ(ParseSplitMode("proof-faithful"), SplitMode::kProofFaithful);
  EXPECT_THROW(ParseSplitMode("slow"), Error);
}

TEST(Bounds, MaxLevel) {
  const int expected[] = {2, 3, 3, 4, 4, 4, 4, 4, 5, 5};
  for (int cd = 1; cd <= 10; ++cd) {
    EXPECT_EQ(MaxConsistentSierpinskiLevel(cd), expected[cd - 1]) << cd;
  }
  EXPECT_EQ(MaxConsistentSierpinskiLevel(3.0), 3);
  EXPECT_GE(MaxConsistentSierpinskiLevel(2.5), 3);
}

TEST(Bounds, Calculators) {
  const BoundsReport r = ComputeBounds(LabeledGraph::Complete(3), 1.0, 2.0);
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(r.max_degree, 2);
  EXPECT_NEAR(r.luczak_rodl.convert_to<double>(), 9.0, 1e-12);
  EXPECT_NEAR(r.incompressible_lower.convert_to<double>(), 2.0, 1e-12);
  EXPECT_NEAR(r.incompressible_upper.convert_to<double>(), 11.0, 1e-12);
  EXPECT_NEAR(r.chvatal.convert_to<double>(), 3 * 4.0, 1e-9);
}

}  // namespace
}  // namespace knitlab

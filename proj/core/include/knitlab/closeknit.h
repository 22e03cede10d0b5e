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

#ifndef KNITLAB_CLOSEKNIT_H_
#define KNITLAB_CLOSEKNIT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "knitlab/graph.h"

namespace knitlab {

using Rational = boost::rational<int64_t>;

// "p/q", always with an explicit denominator.
std::string FormatRational(const Rational& value);
// Accepts "p/q" or an integer.
Rational ParseRational(std::string_view text);

// d(S', S): edges {i,j} with i in S' and j in S, each counted once.
// Requires a nonempty S' contained in S, itself contained in V(G).
int64_t InternalDegree(const LabeledGraph& graph, const VertexSubset& inner,
                       const VertexSubset& group);

inline constexpr int kMaxRatioGroupSize = 20;

struct GroupReport {
  VertexSubset group;
  // min over nonempty S' of d(S',S) / sum_{i in S'} deg(i).
  Rational min_ratio;
  // Lexicographically smallest minimiser.
  VertexSubset argmin;
};

// Exact minimum over all 2^|S| - 1 nonempty subsets. Rejects |S| above
// kMaxRatioGroupSize and groups containing an isolated vertex.
GroupReport MinRatio(const LabeledGraph& graph, const VertexSubset& group);

struct CloseKnitOptions {
  // Upper bound on candidate groups examined across the whole search.
  int64_t candidate_cap = 20'000'000;
};

struct CloseKnitResult {
  bool close_knit = false;
  Rational r;
  int k = 0;
  // witness[v-1]: smallest (then lexicographically first) connected group
  // of size <= k containing v with min_ratio >= r. Empty when none exists.
  std::vector<VertexSubset> witness;
  // Lowest label without a qualifying group, when the search fails.
  std::optional<Vertex> failing_vertex;
  int64_t candidates_examined = 0;
};

// Searches connected vertex subsets containing each vertex, up to size k.
CloseKnitResult IsRkCloseKnit(const LabeledGraph& graph, const Rational& r,
                              int k, const CloseKnitOptions& options = {});

// Smallest k <= k_cap for which `graph` is (r,k)-close-knit.
std::optional<int> MinimalCloseKnitK(const LabeledGraph& graph,
                                     const Rational& r, int k_cap,
                                     const CloseKnitOptions& options = {});

struct FamilyScanRow {
  int level = 0;
  // Minimal k <= k_cap for which S_level is (r,k)-close-knit.
  std::optional<int> min_k;
};

std::vector<FamilyScanRow> FamilyScan(int max_level, const Rational& r,
                                      int k_cap = 8,
                                      const CloseKnitOptions& options = {});

}  // namespace knitlab

#endif  // KNITLAB_CLOSEKNIT_H_

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

#ifndef KNITLAB_RAMSEY_H_
#define KNITLAB_RAMSEY_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "knitlab/graph.h"
#include "knitlab/mdl_codec.h"

namespace knitlab {

// True iff some induced copy of `pattern` has all of its edges one colour.
bool HasMonoInduced(const LabeledGraph& graph, const TwoColoring& coloring,
                    const LabeledGraph& pattern);

inline constexpr int kMaxHostEdges = 28;

struct ColoringSearchOptions {
  // Worker threads. Results do not depend on this value.
  int jobs = 1;
};

struct HostCertificate {
  LabeledGraph host;
  LabeledGraph pattern;
  bool verified = false;
  // 2^|E| when verified; otherwise the number of colourings up to and
  // including the witness in the fixed enumeration order.
  uint64_t colorings_checked = 0;
  int64_t occurrences = 0;
  // A colouring with no monochromatic induced copy, when not verified.
  std::optional<TwoColoring> witness;
};

// Decides whether every 2-colouring of E(host) contains a monochromatic
// induced copy of `pattern`.
//
// Colourings are split into 2^p chunks by the colours of the last p edges
// (p = min(|E|, 6), fixed by |E| alone); each chunk is walked in Gray-code
// order from all-red, recolouring one edge per step and updating per-copy
// red counts. The reported witness is the first failure in this global
// order, so it does not depend on the number of jobs.
HostCertificate IsHost(const LabeledGraph& host, const LabeledGraph& pattern,
                       const ColoringSearchOptions& options = {});

struct OracleResult {
  // Index into the candidate list of the first verified host.
  std::optional<size_t> found;
  std::vector<HostCertificate> certificates;
};

// Smallest verified host among `candidates`, scanned in the given order.
// The answer is scoped to that list, not to all graphs.
OracleResult InducedRamseyOracle(const LabeledGraph& pattern,
                                 const std::vector<LabeledGraph>& candidates,
                                 const ColoringSearchOptions& options = {});

struct UnionConstruction {
  LabeledGraph graph;
  // Vertices 1..pattern_free_order hold the pattern-free part G1; the host
  // part G2 follows.
  int pattern_free_order = 0;
  int host_order = 0;
};

UnionConstruction ConstructUnion(const LabeledGraph& pattern_free,
                                 const LabeledGraph& host);

enum class SplitMode { kProofFaithful, kFast };

std::string_view SplitModeName(SplitMode mode);
SplitMode ParseSplitMode(std::string_view text);

struct SplitResult {
  VertexSubset g1_vertices;
  VertexSubset g2_vertices;
  SplitMode mode = SplitMode::kFast;
  std::vector<VertexSubset> g2_components;
};

// Splits a union into the components that can carry a monochromatic
// induced copy of `pattern` (G2) and the rest (G1).
//
// kProofFaithful enumerates edge 2-colourings of each component and stops
// at the first one with a monochromatic induced copy. kFast only asks
// whether the component contains an induced copy: the all-red colouring
// makes every induced copy monochromatic, and any monochromatic induced
// copy is in particular an induced copy, so the two tests agree.
SplitResult SplitUnion(const LabeledGraph& graph, const LabeledGraph& pattern,
                       SplitMode mode,
                       const ColoringSearchOptions& options = {});

struct BoundsReport {
  int k = 0;
  int max_degree = 0;
  double c = 0.0;
  double c_d = 0.0;
  BigFloat chvatal;               // k 2^{c D log2 D}
  BigFloat luczak_rodl;           // k^{c_d}
  BigFloat incompressible_lower;  // 2^{(k-1)/2}
  BigFloat incompressible_upper;  // 2^{(k-1)/2} + k^{c_d}
  BigFloat union_pattern_free_order;  // n1 = 2^{(k-1)/2} - 1
  BigFloat union_deficiency;          // n1 n2 + C(n2,2), n2 = k^{c_d}
};

BoundsReport ComputeBounds(const LabeledGraph& pattern, double c, double c_d);

// Largest level l with n_l^{c_d} >= 2^{(n_l-1)/2}; 0 if none. The levels
// satisfying the inequality form a prefix 1..L (c_d log2 x - (x-1)/2 is
// concave and vanishes at x = 1). Integral c_d is decided in exact integer
// arithmetic.
int MaxConsistentSierpinskiLevel(double c_d);

}  // namespace knitlab

#endif  // KNITLAB_RAMSEY_H_

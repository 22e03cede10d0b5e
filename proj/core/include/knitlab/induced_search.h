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

#ifndef KNITLAB_INDUCED_SEARCH_H_
#define KNITLAB_INDUCED_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "knitlab/graph.h"

namespace knitlab {

// Bit-matrix adjacency for search kernels; vertices are 0-based here.
class DenseGraph {
 public:
  explicit DenseGraph(const LabeledGraph& graph);

  int order() const { return n_; }
  int words() const { return words_; }
  const uint64_t* row(int v) const { return &bits_[static_cast<size_t>(v) * words_]; }
  bool adjacent(int u, int v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  int degree(int v) const { return degree_[v]; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
  std::vector<int> degree_;
};

inline constexpr int kMaxPatternOrder = 16;

// Vertex sets of `graph` whose induced subgraph is isomorphic to `pattern`,
// in lexicographic order, truncated to `limit`. Backtracking over pattern
// vertices with bitset candidate filtering (adjacency and non-adjacency to
// every matched vertex) and degree pruning.
std::vector<VertexSubset> FindInducedOccurrences(
    const LabeledGraph& graph, const LabeledGraph& pattern,
    size_t limit = std::numeric_limits<size_t>::max());

int64_t CountInducedOccurrences(const LabeledGraph& graph,
                                const LabeledGraph& pattern);

// Stops at the first embedding.
bool ContainsInduced(const LabeledGraph& graph, const LabeledGraph& pattern);

// Expected number of partial embeddings visited when searching G(n,1/2):
// sum_{d=1..k} n^d 2^{-C(d,2)}. Used as a feasibility estimate.
double ExpectedSearchNodes(int n, int k);

}  // namespace knitlab

#endif  // KNITLAB_INDUCED_SEARCH_H_

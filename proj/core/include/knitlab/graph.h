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

#ifndef KNITLAB_GRAPH_H_
#define KNITLAB_GRAPH_H_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knitlab {

// Raised when an operation's precondition does not hold. The message names
// the violated condition; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertices are labelled 1..n throughout the public API.
using Vertex = int;

// An unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 1..n. Immutable after construction;
// edges are kept in lexicographic order and neighbour lists sorted.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n);
  // Accepts pairs in either orientation. Rejects self-loops, duplicate
  // pairs and labels outside 1..n.
  LabeledGraph(int n, std::vector<Edge> edges);

  static LabeledGraph Complete(int n);

  int order() const { return n_; }
  int64_t size() const { return static_cast<int64_t>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int MaxDegree() const;
  bool HasEdge(Vertex u, Vertex v) const;
  bool HasIsolatedVertex() const;

  // Index of {u,v} in edges(), or -1 when absent.
  int64_t EdgeIndex(Vertex u, Vertex v) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void CheckVertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// C(n,2).
int64_t PairCount(int n);

// 1-based position of the pair {i,j}, i < j, in the order
// (1,2),(1,3),...,(1,n),(2,3),...: sum_{t<i}(n-t) + (j-i).
int64_t PairPosition(int n, Vertex i, Vertex j);

// Inverse of PairPosition.
Edge PairAt(int n, int64_t position);

// The canonical C(n,2)-bit description of a labelled graph.
class EdgeBitString {
 public:
  EdgeBitString() = default;
  EdgeBitString(int n, std::vector<bool> bits);

  // Parses ASCII '0'/'1' text; whitespace is ignored.
  static EdgeBitString FromText(int n, std::string_view text);

  int order() const { return n_; }
  int64_t length() const { return static_cast<int64_t>(bits_.size()); }
  // 1-based, matching PairPosition.
  bool at(int64_t position) const { return bits_[position - 1]; }
  const std::vector<bool>& bits() const { return bits_; }
  std::string ToText() const;

  friend bool operator==(const EdgeBitString&, const EdgeBitString&) = default;

 private:
  int n_ = 0;
  std::vector<bool> bits_;
};

EdgeBitString Encode(const LabeledGraph& graph);
LabeledGraph Decode(const EdgeBitString& bits);
// Rejects text whose length differs from C(n,2), reporting both lengths.
LabeledGraph Decode(std::string_view text, int n);

// Strictly increasing list of vertex labels.
class VertexSubset {
 public:
  VertexSubset() = default;
  // Rejects unsorted input, duplicates and non-positive labels.
  explicit VertexSubset(std::vector<Vertex> members);
  static VertexSubset FromUnsorted(std::vector<Vertex> members);
  static VertexSubset Range(Vertex first, Vertex last);

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  Vertex operator[](int i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  bool contains(Vertex v) const;
  // 0-based rank of v within the subset, or -1.
  int RankOf(Vertex v) const;

  // Throws unless every member lies in 1..n.
  void CheckWithin(int n) const;

  friend auto operator<=>(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<Vertex> members_;
};

std::string FormatSubset(const VertexSubset& subset);
// Parses "3,5,8" (order and spacing are free; duplicates rejected).
VertexSubset ParseSubset(std::string_view text);

// Relabels the members of `subset` to 1..|subset| by rank.
LabeledGraph InducedSubgraph(const LabeledGraph& graph,
                             const VertexSubset& subset);

// True iff the rank-relabelled induced subgraph equals `pattern` exactly.
bool IsOrderedOccurrence(const LabeledGraph& graph, const VertexSubset& subset,
                         const LabeledGraph& pattern);

struct ComponentPartition {
  std::vector<VertexSubset> components;
};

// Members sorted, components sorted by smallest member.
ComponentPartition ConnectedComponents(const LabeledGraph& graph);

// `first` keeps labels 1..n1, `second` is shifted to n1+1..n1+n2.
LabeledGraph DisjointUnion(const LabeledGraph& first,
                           const LabeledGraph& second);

// G(n,p). The generator is std::mt19937_64 seeded with `seed`; pairs are
// visited in PairPosition order and each consumes exactly one 64-bit draw,
// kept iff (draw >> 11) * 2^-53 < p. This mapping is stable across versions.
LabeledGraph SampleGnp(int n, double p, uint64_t seed);

enum class Color : uint8_t { kRed = 0, kBlue = 1 };

std::string_view ColorName(Color color);

// Edge 2-colouring aligned with graph.edges().
class TwoColoring {
 public:
  TwoColoring() = default;
  explicit TwoColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}
  static TwoColoring Uniform(const LabeledGraph& graph, Color color);
  // Builds from (u, v, color) triples; every edge must be coloured exactly
  // once and no non-edge may appear.
  static TwoColoring FromTriples(
      const LabeledGraph& graph,
      const std::vector<std::pair<Edge, Color>>& triples);

  Color of(int64_t edge_index) const { return colors_[edge_index]; }
  const std::vector<Color>& colors() const { return colors_; }
  int64_t size() const { return static_cast<int64_t>(colors_.size()); }
  // Throws unless the colouring is total on graph's edge set.
  void CheckTotal(const LabeledGraph& graph) const;

  friend bool operator==(const TwoColoring&, const TwoColoring&) = default;

 private:
  std::vector<Color> colors_;
};

}  // namespace knitlab

#endif  // KNITLAB_GRAPH_H_

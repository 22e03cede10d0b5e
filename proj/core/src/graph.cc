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

#include "knitlab/graph.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "knitlab/random.h"

namespace knitlab {

LabeledGraph::LabeledGraph(int n) : n_(n), adjacency_(n > 0 ? n : 0) {
  if (n < 0) throw Error("graph: vertex count must be non-negative");
}

LabeledGraph::LabeledGraph(int n, std::vector<Edge> edges) : LabeledGraph(n) {
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw Error("graph: self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n) {
      throw Error("graph: edge {" + std::to_string(e.u) + "," +
                  std::to_string(e.v) + "} outside 1.." + std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error("graph: duplicate edge {" + std::to_string(dup->u) + "," +
                std::to_string(dup->v) + "}");
  }
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adjacency_[e.u - 1].push_back(e.v);
    adjacency_[e.v - 1].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

LabeledGraph LabeledGraph::Complete(int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(PairCount(n)));
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) edges.push_back({i, j});
  }
  return LabeledGraph(n, std::move(edges));
}

void LabeledGraph::CheckVertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw Error("graph: vertex " + std::to_string(v) + " outside 1.." +
                std::to_string(n_));
  }
}

std::span<const Vertex> LabeledGraph::neighbors(Vertex v) const {
  CheckVertex(v);
  return adjacency_[v - 1];
}

int LabeledGraph::degree(Vertex v) const {
  CheckVertex(v);
  return static_cast<int>(adjacency_[v - 1].size());
}

int LabeledGraph::MaxDegree() const {
  size_t best = 0;
  for (const auto& row : adjacency_) best = std::max(best, row.size());
  return static_cast<int>(best);
}

bool LabeledGraph::HasEdge(Vertex u, Vertex v) const {
  CheckVertex(u);
  CheckVertex(v);
  const auto& row = adjacency_[u - 1];
  return std::binary_search(row.begin(), row.end(), v);
}

bool LabeledGraph::HasIsolatedVertex() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& row) { return row.empty(); });
}

int64_t LabeledGraph::EdgeIndex(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return it - edges_.begin();
}

int64_t PairCount(int n) {
  return n < 2 ? 0 : static_cast<int64_t>(n) * (n - 1) / 2;
}

int64_t PairPosition(int n, Vertex i, Vertex j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) {
    throw Error("pair position: invalid pair {" + std::to_string(i) + "," +
                std::to_string(j) + "} for n=" + std::to_string(n));
  }
  // sum_{t=1}^{i-1} (n - t) = (i-1)n - (i-1)i/2
  const int64_t before = static_cast<int64_t>(i - 1) * n -
                         static_cast<int64_t>(i - 1) * i / 2;
  return before + (j - i);
}

Edge PairAt(int n, int64_t position) {
  if (position < 1 || position > PairCount(n)) {
    throw Error("pair position " + std::to_string(position) +
                " outside 1.." + std::to_string(PairCount(n)));
  }
  Vertex i = 1;
  int64_t remaining = position;
  while (remaining > n - i) {
    remaining -= n - i;
    ++i;
  }
  return {i, static_cast<Vertex>(i + remaining)};
}

EdgeBitString::EdgeBitString(int n, std::vector<bool> bits)
    : n_(n), bits_(std::move(bits)) {
  if (n < 0) throw Error("bit string: vertex count must be non-negative");
  if (static_cast<int64_t>(bits_.size()) != PairCount(n)) {
    throw Error("bit string: expected length " + std::to_string(PairCount(n)) +
                " for n=" + std::to_string(n) + ", got " +
                std::to_string(bits_.size()));
  }
}

EdgeBitString EdgeBitString::FromText(int n, std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(c == '1');
    } else if (c != ' ' && c != '\n' && c != '\r' && c != '\t') {
      throw Error(std::string("bit string: unexpected character '") + c + "'");
    }
  }
  return EdgeBitString(n, std::move(bits));
}

std::string EdgeBitString::ToText() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

EdgeBitString Encode(const LabeledGraph& graph) {
  std::vector<bool> bits(static_cast<size_t>(PairCount(graph.order())), false);
  for (const Edge& e : graph.edges()) {
    bits[PairPosition(graph.order(), e.u, e.v) - 1] = true;
  }
  return EdgeBitString(graph.order(), std::move(bits));
}

LabeledGraph Decode(const EdgeBitString& bits) {
  const int n = bits.order();
  std::vector<Edge> edges;
  int64_t pos = 0;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      if (bits.bits()[pos++]) edges.push_back({i, j});
    }
  }
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph Decode(std::string_view text, int n) {
  return Decode(EdgeBitString::FromText(n, text));
}

VertexSubset::VertexSubset(std::vector<Vertex> members)
    : members_(std::move(members)) {
  for (size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1) {
      throw Error("vertex subset: label " + std::to_string(members_[i]) +
                  " is not positive");
    }
    if (i > 0 && members_[i] <= members_[i - 1]) {
      throw Error("vertex subset: labels must be strictly increasing");
    }
  }
}

VertexSubset VertexSubset::FromUnsorted(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  return VertexSubset(std::move(members));
}

VertexSubset VertexSubset::Range(Vertex first, Vertex last) {
  std::vector<Vertex> members;
  for (Vertex v = first; v <= last; ++v) members.push_back(v);
  return VertexSubset(std::move(members));
}

bool VertexSubset::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

int VertexSubset::RankOf(Vertex v) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return -1;
  return static_cast<int>(it - members_.begin());
}

void VertexSubset::CheckWithin(int n) const {
  if (!members_.empty() && members_.back() > n) {
    throw Error("vertex subset: label " + std::to_string(members_.back()) +
                " outside 1.." + std::to_string(n));
  }
}

std::string FormatSubset(const VertexSubset& subset) {
  std::string out;
  for (Vertex v : subset) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v);
  }
  return out;
}

VertexSubset ParseSubset(std::string_view text) {
  std::vector<Vertex> members;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      Vertex v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw Error("vertex subset: cannot parse '" + std::string(token) + "'");
      }
      members.push_back(v);
    }
    start = end + 1;
  }
  return VertexSubset::FromUnsorted(std::move(members));
}

LabeledGraph InducedSubgraph(const LabeledGraph& graph,
                             const VertexSubset& subset) {
  subset.CheckWithin(graph.order());
  std::vector<Edge> edges;
  for (int a = 0; a < subset.size(); ++a) {
    for (Vertex w : graph.neighbors(subset[a])) {
      if (w <= subset[a]) continue;
      const int b = subset.RankOf(w);
      if (b >= 0) edges.push_back({a + 1, b + 1});
    }
  }
  return LabeledGraph(subset.size(), std::move(edges));
}

bool IsOrderedOccurrence(const LabeledGraph& graph, const VertexSubset& subset,
                         const LabeledGraph& pattern) {
  if (subset.size() != pattern.order()) {
    throw Error("occurrence: subset has " + std::to_string(subset.size()) +
                " vertices but pattern has " + std::to_string(pattern.order()));
  }
  return InducedSubgraph(graph, subset) == pattern;
}

ComponentPartition ConnectedComponents(const LabeledGraph& graph) {
  const int n = graph.order();
  std::vector<char> seen(n + 1, 0);
  ComponentPartition out;
  std::vector<Vertex> stack;
  for (Vertex root = 1; root <= n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> members;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : graph.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.components.push_back(VertexSubset::FromUnsorted(std::move(members)));
  }
  return out;
}

LabeledGraph DisjointUnion(const LabeledGraph& first,
                           const LabeledGraph& second) {
  const int shift = first.order();
  std::vector<Edge> edges = first.edges();
  for (const Edge& e : second.edges()) {
    edges.push_back({e.u + shift, e.v + shift});
  }
  return LabeledGraph(first.order() + second.order(), std::move(edges));
}

LabeledGraph SampleGnp(int n, double p, uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error("gnp: probability must lie in [0,1]");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      if (UnitDraw(rng) < p) edges.push_back({i, j});
    }
  }
  return LabeledGraph(n, std::move(edges));
}

std::string_view ColorName(Color color) {
  return color == Color::kRed ? "red" : "blue";
}

TwoColoring TwoColoring::Uniform(const LabeledGraph& graph, Color color) {
  return TwoColoring(std::vector<Color>(graph.edges().size(), color));
}

TwoColoring TwoColoring::FromTriples(
    const LabeledGraph& graph,
    const std::vector<std::pair<Edge, Color>>& triples) {
  std::vector<int> assigned(graph.edges().size(), 0);
  std::vector<Color> colors(graph.edges().size(), Color::kRed);
  for (const auto& [edge, color] : triples) {
    const int64_t index = graph.EdgeIndex(edge.u, edge.v);
    if (index < 0) {
      throw Error("colouring: {" + std::to_string(edge.u) + "," +
                  std::to_string(edge.v) + "} is not an edge");
    }
    if (assigned[index]++) {
      throw Error("colouring: edge {" + std::to_string(edge.u) + "," +
                  std::to_string(edge.v) + "} coloured twice");
    }
    colors[index] = color;
  }
  for (size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i]) {
      const Edge& e = graph.edges()[i];
      throw Error("colouring: partial, edge {" + std::to_string(e.u) + "," +
                  std::to_string(e.v) + "} has no colour");
    }
  }
  return TwoColoring(std::move(colors));
}

void TwoColoring::CheckTotal(const LabeledGraph& graph) const {
  if (colors_.size() != graph.edges().size()) {
    throw Error("colouring: partial, covers " + std::to_string(colors_.size()) +
                " of " + std::to_string(graph.edges().size()) + " edges");
  }
}

}  // namespace knitlab

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

#ifndef KNITLAB_SIERPINSKI_H_
#define KNITLAB_SIERPINSKI_H_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "knitlab/graph.h"

namespace knitlab {

// Point of the triangular lattice. Row r holds columns 0..r of the
// enclosing triangle; (r,c) neighbours (r+1,c) and (r+1,c+1) below it.
struct LatticePoint {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Closed forms: (3/2)(3^{l-1}+1) vertices and 3^l edges.
int64_t SierpinskiVertexCount(int level);
int64_t SierpinskiEdgeCount(int level);

// Level-l Sierpinski gasket graph S_l.
//
// S_1 is the triangle on (0,0),(1,0),(1,1). S_l is three copies of S_{l-1}
// translated by (0,0), (R',0) and (R',R') with R' = 2^{l-2}; copies that
// land on the same lattice point are the same vertex, which is exactly the
// corner identification. Labels are assigned by sorting points by
// (row, col), i.e. top to bottom and left to right.
class SierpinskiGraph {
 public:
  static constexpr int kDefaultMaxLevel = 12;

  static SierpinskiGraph Build(int level, int max_level = kDefaultMaxLevel);

  int level() const { return level_; }
  // Row span R = 2^{l-1}.
  int span() const { return 1 << (level_ - 1); }
  const LabeledGraph& graph() const { return graph_; }
  // Indexed by label - 1.
  const std::vector<LatticePoint>& coords() const { return coords_; }
  LatticePoint coord(Vertex v) const { return coords_[v - 1]; }
  // Label of a lattice point, or -1 when it is not a vertex.
  Vertex LabelAt(LatticePoint p) const;

  // Labels of (0,0), (R,0), (R,R).
  std::array<Vertex, 3> corners() const;

  // The 3^{l-j} level-j sub-gaskets, ordered by their top point.
  std::vector<VertexSubset> Subgaskets(int j) const;

  // {"level": l, "vertices": [{"label":..,"row":..,"col":..}], "corners": [..]}
  std::string CoordsJson() const;

 private:
  int level_ = 0;
  LabeledGraph graph_;
  std::vector<LatticePoint> coords_;
};

}  // namespace knitlab

#endif  // KNITLAB_SIERPINSKI_H_

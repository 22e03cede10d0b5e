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

#include "knitlab/sierpinski.h"

#include <algorithm>

#include "json.hpp"

namespace knitlab {
namespace {

int64_t Pow3(int e) {
  int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= 3;
  return out;
}

// Top points of the elementary triangles of S_level.
std::vector<LatticePoint> TriangleTops(int level) {
  std::vector<LatticePoint> tops = {{0, 0}};
  for (int l = 2; l <= level; ++l) {
    const int shift = 1 << (l - 2);
    const size_t count = tops.size();
    tops.reserve(count * 3);
    for (size_t i = 0; i < count; ++i) {
      tops.push_back({tops[i].row + shift, tops[i].col});
    }
    for (size_t i = 0; i < count; ++i) {
      tops.push_back({tops[i].row + shift, tops[i].col + shift});
    }
  }
  return tops;
}

std::vector<LatticePoint> GasketPoints(int level) {
  std::vector<LatticePoint> points;
  for (const LatticePoint& t : TriangleTops(level)) {
    points.push_back(t);
    points.push_back({t.row + 1, t.col});
    points.push_back({t.row + 1, t.col + 1});
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

void CheckLevel(int level) {
  if (level < 1) {
    throw Error("sierpinski: level must be >= 1, got " + std::to_string(level));
  }
  if (level > 30) throw Error("sierpinski: level too large for closed forms");
}

}  // namespace

int64_t SierpinskiVertexCount(int level) {
  CheckLevel(level);
  return 3 * (Pow3(level - 1) + 1) / 2;
}

int64_t SierpinskiEdgeCount(int level) {
  CheckLevel(level);
  return Pow3(level);
}

SierpinskiGraph SierpinskiGraph::Build(int level, int max_level) {
  if (level < 1) {
    throw Error("sierpinski: level must be >= 1, got " + std::to_string(level));
  }
  if (level > max_level) {
    throw Error("sierpinski: level " + std::to_string(level) +
                " exceeds the configured maximum " + std::to_string(max_level) +
                " (S_l has (3/2)(3^{l-1}+1) vertices; raise the limit "
                "explicitly if memory allows)");
  }
  SierpinskiGraph out;
  out.level_ = level;
  out.coords_ = GasketPoints(level);
  std::vector<Edge> edges;
  for (const LatticePoint& t : TriangleTops(level)) {
    const Vertex a = out.LabelAt(t);
    const Vertex b = out.LabelAt({t.row + 1, t.col});
    const Vertex c = out.LabelAt({t.row + 1, t.col + 1});
    edges.push_back({a, b});
    edges.push_back({a, c});
    edges.push_back({b, c});
  }
  out.graph_ = LabeledGraph(static_cast<int>(out.coords_.size()), std::move(edges));
  return out;
}

Vertex SierpinskiGraph::LabelAt(LatticePoint p) const {
  auto it = std::lower_bound(coords_.begin(), coords_.end(), p);
  if (it == coords_.end() || *it != p) return -1;
  return static_cast<Vertex>(it - coords_.begin()) + 1;
}

std::array<Vertex, 3> SierpinskiGraph::corners() const {
  const int r = span();
  return {LabelAt({0, 0}), LabelAt({r, 0}), LabelAt({r, r})};
}

std::vector<VertexSubset> SierpinskiGraph::Subgaskets(int j) const {
  if (j < 1 || j > level_) {
    throw Error("subgaskets: level " + std::to_string(j) + " outside 1.." +
                std::to_string(level_));
  }
  const int scale = 1 << (j - 1);
  const std::vector<LatticePoint> local = GasketPoints(j);
  std::vector<LatticePoint> tops = TriangleTops(level_ - j + 1);
  std::sort(tops.begin(), tops.end());
  std::vector<VertexSubset> out;
  out.reserve(tops.size());
  for (const LatticePoint& t : tops) {
    std::vector<Vertex> members;
    members.reserve(local.size());
    for (const LatticePoint& p : local) {
      members.push_back(LabelAt({t.row * scale + p.row, t.col * scale + p.col}));
    }
    out.push_back(VertexSubset::FromUnsorted(std::move(members)));
  }
  return out;
}

std::string SierpinskiGraph::CoordsJson() const {
  nlohmann::json vertices = nlohmann::json::array();
  for (size_t i = 0; i < coords_.size(); ++i) {
    vertices.push_back({{"label", i + 1},
                        {"row", coords_[i].row},
                        {"col", coords_[i].col}});
  }
  const auto c = corners();
  return nlohmann::json{{"level", level_},
                        {"vertices", vertices},
                        {"corners", {c[0], c[1], c[2]}}}
      .dump();
}

}  // namespace knitlab

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

#include "knitlab/patterns.h"

#include <charconv>

#include "knitlab/sierpinski.h"

namespace knitlab {
namespace {

int ParsePositive(std::string_view digits, std::string_view context) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() ||
      ptr != digits.data() + digits.size() || value < 0) {
    throw Error("unknown " + std::string(context) + " '" +
                std::string(digits) + "'");
  }
  return value;
}

}  // namespace

LabeledGraph PathGraph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph CycleGraph(int n) {
  if (n < 3) throw Error("cycle: needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({1, n});
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph StarGraph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= leaves + 1; ++v) edges.push_back({1, v});
  return LabeledGraph(leaves + 1, std::move(edges));
}

LabeledGraph NamedPattern(std::string_view name) {
  if (name.size() < 2) throw Error("unknown pattern '" + std::string(name) + "'");
  const int value = ParsePositive(name.substr(1), "pattern");
  switch (name[0]) {
    case 'K':
      return LabeledGraph::Complete(value);
    case 'S':
      return SierpinskiGraph::Build(value).graph();
    case 'P':
      return PathGraph(value);
    case 'C':
      return CycleGraph(value);
    case 'E':
      return LabeledGraph(value);
    default:
      throw Error("unknown pattern '" + std::string(name) + "'");
  }
}

GeneratorId GeneratorId::Parse(std::string_view text) {
  const size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error("generator id must look like family:parameter, got '" +
                std::string(text) + "'");
  }
  GeneratorId id{std::string(text.substr(0, colon)),
                 ParsePositive(text.substr(colon + 1), "generator parameter")};
  if (id.family != "sierpinski" && id.family != "complete" &&
      id.family != "path" && id.family != "cycle" && id.family != "empty") {
    throw Error("unknown generator family '" + id.family + "'");
  }
  return id;
}

std::string GeneratorId::ToString() const {
  return family + ":" + std::to_string(parameter);
}

LabeledGraph GeneratorId::Generate() const {
  if (family == "sierpinski") return SierpinskiGraph::Build(parameter).graph();
  if (family == "complete") return LabeledGraph::Complete(parameter);
  if (family == "path") return PathGraph(parameter);
  if (family == "cycle") return CycleGraph(parameter);
  if (family == "empty") return LabeledGraph(parameter);
  throw Error("unknown generator family '" + family + "'");
}

}  // namespace knitlab

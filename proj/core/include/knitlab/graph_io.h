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

#ifndef KNITLAB_GRAPH_IO_H_
#define KNITLAB_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "knitlab/graph.h"

namespace knitlab {

// graph6, as described in nauty's formats.txt. Output carries no header and
// no trailing newline; input accepts an optional ">>graph6<<" prefix and
// trailing whitespace.
std::string ToGraph6(const LabeledGraph& graph);
LabeledGraph FromGraph6(std::string_view text);

// {"n": 3, "edges": [[1,2],[2,3]]}, edges in lexicographic order.
std::string ToJson(const LabeledGraph& graph);
LabeledGraph FromJson(std::string_view text);

// Undirected DOT; write-only.
std::string ToDot(const LabeledGraph& graph, std::string_view name = "G");

// Guesses the format from content: JSON if the first non-space character is
// '{', graph6 otherwise.
LabeledGraph ParseGraph(std::string_view text);
LabeledGraph ReadGraphFile(const std::string& path);

// [[i, j, "red"|"blue"], ...] in edge order.
std::string ColoringToJson(const LabeledGraph& graph,
                           const TwoColoring& coloring);
TwoColoring ColoringFromJson(const LabeledGraph& graph, std::string_view text);

}  // namespace knitlab

#endif  // KNITLAB_GRAPH_IO_H_

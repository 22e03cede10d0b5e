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

#ifndef KNITLAB_PATTERNS_H_
#define KNITLAB_PATTERNS_H_

#include <string>
#include <string_view>

#include "knitlab/graph.h"

namespace knitlab {

LabeledGraph PathGraph(int n);
LabeledGraph CycleGraph(int n);
// K_{1,leaves}, centre labelled 1.
LabeledGraph StarGraph(int leaves);

// Shorthands: K<n> complete, S<l> Sierpinski, P<n> path, C<n> cycle,
// E<n> edgeless.
LabeledGraph NamedPattern(std::string_view name);

// A size-constructible family plus its parameter, e.g. "sierpinski:2".
// Families: sierpinski, complete, path, cycle, empty.
struct GeneratorId {
  std::string family;
  int parameter = 0;

  static GeneratorId Parse(std::string_view text);
  std::string ToString() const;
  // Deterministic: the same id always yields the same labelled graph.
  LabeledGraph Generate() const;

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

}  // namespace knitlab

#endif  // KNITLAB_PATTERNS_H_

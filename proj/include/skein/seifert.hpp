/*
   Copyright 2026 The skein-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <vector>

#include "skein/diagram.hpp"

namespace skein {

struct SeifertEdge {
  int u;
  int v;
  int sign;
  int crossing;
};

struct SeifertData {
  /// Edge labels (as in Diagram::crossings) of each circle; crossing-free
  /// circles are empty.
  std::vector<std::vector<int>> circles;
  int s = 0;
  int c = 0;
  /// One vertex per circle, one signed edge per crossing.
  std::vector<SeifertEdge> graph;
  /// 2-connected components of the graph, as lists of crossing ids.
  std::vector<std::vector<int>> blocks;
  /// Genus of the surface from Seifert's algorithm; (c - s + 1)/2 for knots.
  int genus = 0;
  bool homogeneous = true;
  bool positive = true;
  bool negative = true;
  int writhe = 0;
};

SeifertData seifert(const Diagram& d);

struct GenusVerdict {
  int genus;
  /// True when the diagram is homogeneous, so genus is the knot genus.
  /// Otherwise genus is only an upper bound.
  bool certified;
};

/// Throws DiagramError if d is not a knot diagram.
GenusVerdict certified_genus(const Diagram& d);

}  // namespace skein

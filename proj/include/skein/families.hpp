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

// Parametric diagram families.

#pragma once

#include <utility>
#include <vector>

#include "skein/diagram.hpp"

namespace skein {

/// Pretzel knot with one vertical twist column per parameter; |p| crossings
/// in a column, with the sign of p giving its handedness (pretzel(-1,-1,-1)
/// is the negative trefoil). Crossings are numbered column by column, so
/// crossing 0 is the top crossing of the first column. Throws DiagramError
/// if the parameters give a link.
Diagram pretzel(const std::vector<int>& columns);
Diagram pretzel(int p, int q, int r);

/// Closure of the 2-braid sigma_1^n; n must be odd.
Diagram torus2(int n);

/// pretzel(j, 1, 1) for j >= 0: j twists plus a two-crossing clasp.
Diagram twist_knot(int j);

/// The crossing of twist_knot(1) whose twisting generates the odd members
/// of the twist-knot family: twist_knot(2n+1) inserts n antiparallel full
/// twists there. Returns the seed diagram and crossing id.
std::pair<Diagram, int> twist_family_seed();

/// Builds a slot graph where some connections pass through bare wires.
/// Ports below `slots` are real crossing slots; ports allocated with
/// add_port() are virtual and must end up with exactly two connections.
class WireBuilder {
 public:
  explicit WireBuilder(int slots) : adj_(static_cast<std::size_t>(slots)), slots_(slots) {}

  int add_port();
  void join(int a, int b);

  /// Slot pairing and the number of closed wire loops.
  std::pair<std::vector<int>, int> resolve() const;

 private:
  std::vector<std::vector<int>> adj_;
  int slots_;
};

}  // namespace skein

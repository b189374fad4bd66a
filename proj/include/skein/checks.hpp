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

// Invariant checks on a single diagram, shared by `skein-lab check` and the
// test suites.

#pragma once

#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"
#include "skein/skein_tree.hpp"

namespace skein {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// P(l, -l - 1/l) == 1 at l in {2, 3, -5/2}. Holds for knot polynomials.
bool identity_holds(const Laurent2& p);

/// The HOMFLY relation at crossing x, evaluated on the diagram-level
/// switch and smoothing.
bool homfly_relation_holds(const Diagram& d, int x, const SkeinOptions& opts = {});
/// Lambda(D) + Lambda(switch) == z (Lambda(L0) + Lambda(Linf)) at x.
bool kauffman_relation_holds(const Diagram& d, int x, const SkeinOptions& opts = {});

/// Every m-exponent of P lies in [0, 2g(D)] (knots only).
bool morton_window_holds(const Laurent2& p, int diagram_genus);
/// Some coefficient of P has |l-exponent| <= 2g(D).
bool morton_existence_holds(const Laurent2& p, int diagram_genus);

/// Runs every applicable check. With `with_kauffman`, also the Kauffman
/// relation and mirror checks.
std::vector<CheckResult> invariant_suite(const Diagram& d, bool with_kauffman = true, const SkeinOptions& opts = {});

}  // namespace skein

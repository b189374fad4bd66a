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

#include <utility>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"
#include "skein/skein_tree.hpp"

namespace skein {

/// The value -(l + 1/l)/m that a split unknotted component contributes.
Laurent2 homfly_delta();

/// P of the k-component unlink: delta^(k-1).
Laurent2 unlink_homfly(int components);

/// Skein polynomial in (l, m) with
///   l^-1 P(L+) + l P(L-) = -m P(L0),   P(unknot) = 1.
/// Throws BudgetExceeded if more than opts.budget nodes are expanded.
Laurent2 homfly(const Diagram& d, const SkeinOptions& opts = {});
Laurent2 homfly(const GaussCode& g, const SkeinOptions& opts = {});

/// The diagrams completing a skein triple at crossing x: the switched
/// diagram and the oriented smoothing. Throws DiagramError for a bad id.
std::pair<Diagram, Diagram> skein_triple(const Diagram& d, int crossing);

}  // namespace skein

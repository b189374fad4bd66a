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

#include <array>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"
#include "skein/skein_tree.hpp"

namespace skein {

/// (a + 1/a)/z - 1, the factor a split unknotted component contributes.
Laurent2 kauffman_delta();

/// Regular-isotopy invariant in (a, z):
///   Lambda(L+) + Lambda(L-) = z (Lambda(L0) + Lambda(Linf)),
///   Lambda(unknot) = 1, a positive curl multiplies Lambda by a.
Laurent2 kauffman_lambda(const Diagram& d, const SkeinOptions& opts = {});
Laurent2 kauffman_lambda(const GaussCode& g, const SkeinOptions& opts = {});

/// F = a^(-writhe) Lambda, an ambient isotopy invariant.
Laurent2 kauffman(const Diagram& d, const SkeinOptions& opts = {});

/// The diagrams in the four-term relation at crossing x, in the order
/// switched, oriented smoothing, unoriented smoothing.
std::array<Diagram, 3> kauffman_quad(const Diagram& d, int crossing);

/// Largest exponent of a; throws ZeroPolynomial for F = 0.
int maxdeg_a(const Laurent2& f);

}  // namespace skein

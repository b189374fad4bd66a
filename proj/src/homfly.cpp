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

#include "skein/homfly.hpp"

#include "skein_eval.hpp"

namespace skein {

namespace {

struct HomflyRules {
  Vars vars = kHomflyVars;
  Laurent2 loop = homfly_delta();

  // Reidemeister I does not change P.
  Laurent2 curl(int) const { return Laurent2::constant(1, vars); }

  Laurent2 descending(const GaussCode& g) const {
    return loop.pow(static_cast<unsigned>(g.components.size() + static_cast<std::size_t>(g.free_loops) - 1));
  }

  // Solving the relation for the crossing being changed:
  //   P(L+) = -l m P(L0) - l^2 P(L-)
  //   P(L-) = -l^-1 m P(L0) - l^-2 P(L+)
  template <class Eval>
  Laurent2 expand(const GaussCode& g, int x, Eval&& eval) const {
    const int s = g.signs[static_cast<std::size_t>(x)];
    Laurent2 smooth = eval(smooth_oriented(g, x));
    Laurent2 swapped = eval(switch_crossing(g, x));
    return smooth.shifted(s, 1).scaled(-1) - swapped.shifted(2 * s, 0);
  }
};

}  // namespace

Laurent2 homfly_delta() {
  return Laurent2::from_terms({{1, -1, -1}, {-1, -1, -1}}, kHomflyVars);
}

Laurent2 unlink_homfly(int components) {
  if (components < 1) throw std::invalid_argument("an unlink needs at least one component");
  return homfly_delta().pow(static_cast<unsigned>(components - 1));
}

Laurent2 homfly(const GaussCode& g, const SkeinOptions& opts) {
  detail::SkeinEvaluator<HomflyRules> eval(opts, HomflyRules{});
  return eval(g);
}

Laurent2 homfly(const Diagram& d, const SkeinOptions& opts) { return homfly(GaussCode::from_diagram(d), opts); }

std::pair<Diagram, Diagram> skein_triple(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count())
    throw DiagramError("crossing id " + std::to_string(crossing) + " out of range");
  return {d.switched(crossing), d.smoothed(crossing)};
}

}  // namespace skein

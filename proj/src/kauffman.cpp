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

#include "skein/kauffman.hpp"

#include "skein_eval.hpp"

namespace skein {

namespace {

struct KauffmanRules {
  Vars vars = kKauffmanVars;
  Laurent2 loop = kauffman_delta();

  Laurent2 curl(int removed_writhe) const { return Laurent2::monomial(1, removed_writhe, 0, vars); }

  // A descending diagram is regularly isotopic to a split unlink carrying
  // its self-writhe in curls; crossings between components cancel in pairs.
  Laurent2 descending(const GaussCode& g) const {
    Laurent2 split = loop.pow(static_cast<unsigned>(g.components.size() + static_cast<std::size_t>(g.free_loops) - 1));
    return split.shifted(g.writhe(), 0);
  }

  template <class Eval>
  Laurent2 expand(const GaussCode& g, int x, Eval&& eval) const {
    Laurent2 smooths = eval(smooth_oriented(g, x));
    smooths += eval(smooth_unoriented(g, x));
    return smooths.shifted(0, 1) - eval(switch_crossing(g, x));
  }
};

}  // namespace

Laurent2 kauffman_delta() {
  return Laurent2::from_terms({{1, -1, 1}, {-1, -1, 1}, {0, 0, -1}}, kKauffmanVars);
}

Laurent2 kauffman_lambda(const GaussCode& g, const SkeinOptions& opts) {
  detail::SkeinEvaluator<KauffmanRules> eval(opts, KauffmanRules{});
  return eval(g);
}

Laurent2 kauffman_lambda(const Diagram& d, const SkeinOptions& opts) {
  return kauffman_lambda(GaussCode::from_diagram(d), opts);
}

Laurent2 kauffman(const Diagram& d, const SkeinOptions& opts) {
  return kauffman_lambda(d, opts).shifted(-d.writhe(), 0);
}

std::array<Diagram, 3> kauffman_quad(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count())
    throw DiagramError("crossing id " + std::to_string(crossing) + " out of range");
  return {d.switched(crossing), d.smoothed(crossing), d.smoothed_unoriented(crossing)};
}

int maxdeg_a(const Laurent2& f) { return f.degrees(0).maxdeg; }

}  // namespace skein

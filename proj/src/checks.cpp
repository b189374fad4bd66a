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

#include "skein/checks.hpp"

#include <cstdlib>

#include "skein/homfly.hpp"
#include "skein/kauffman.hpp"
#include "skein/seifert.hpp"

namespace skein {

bool identity_holds(const Laurent2& p) {
  for (const Rational& l : {Rational(2), Rational(3), Rational(-5, 2)}) {
    if (p.eval(l, -l - 1 / l) != 1) return false;
  }
  return true;
}

bool homfly_relation_holds(const Diagram& d, int x, const SkeinOptions& opts) {
  auto [sw, sm] = skein_triple(d, x);
  Laurent2 pd = homfly(d, opts), psw = homfly(sw, opts), psm = homfly(sm, opts);
  const Laurent2& plus = d.sign(x) > 0 ? pd : psw;
  const Laurent2& minus = d.sign(x) > 0 ? psw : pd;
  return plus.shifted(-1, 0) + minus.shifted(1, 0) == psm.shifted(0, 1).scaled(-1);
}

bool kauffman_relation_holds(const Diagram& d, int x, const SkeinOptions& opts) {
  auto [sw, s0, sinf] = kauffman_quad(d, x);
  Laurent2 lhs = kauffman_lambda(d, opts) + kauffman_lambda(sw, opts);
  Laurent2 rhs = (kauffman_lambda(s0, opts) + kauffman_lambda(sinf, opts)).shifted(0, 1);
  return lhs == rhs;
}

bool morton_window_holds(const Laurent2& p, int diagram_genus) {
  for (const auto& t : p.terms())
    if (t.e2 < 0 || t.e2 > 2 * diagram_genus) return false;
  return true;
}

bool morton_existence_holds(const Laurent2& p, int diagram_genus) {
  for (const auto& t : p.terms())
    if (std::abs(t.e1) <= 2 * diagram_genus) return true;
  return false;
}

std::vector<CheckResult> invariant_suite(const Diagram& d, bool with_kauffman, const SkeinOptions& opts) {
  std::vector<CheckResult> out;
  const Laurent2 p = homfly(d, opts);
  const SeifertData s = seifert(d);
  const bool knot = d.is_knot();

  if (knot) {
    out.push_back({"identity", identity_holds(p), "P(l, -l-1/l) = 1 at l = 2, 3, -5/2"});
    out.push_back({"seifert_parity", (s.c - s.s + 1) % 2 == 0 && s.genus >= 0, "c - s + 1 even, genus >= 0"});
    out.push_back({"morton_window", morton_window_holds(p, s.genus), "m-degrees in [0, 2g(D)]"});
    out.push_back({"morton_existence", morton_existence_holds(p, s.genus), "a term with |l-degree| <= 2g(D)"});
  }
  out.push_back({"mirror", homfly(d.mirrored(), opts) == conjugate_l(p), "P(mirror) = P with l -> 1/l"});
  bool skein_ok = true;
  for (int x = 0; x < d.crossing_count() && skein_ok; ++x) skein_ok = homfly_relation_holds(d, x, opts);
  out.push_back({"homfly_skein", skein_ok, "skein relation at every crossing"});
  if (with_kauffman) {
    const Laurent2 f = kauffman(d, opts);
    out.push_back({"kauffman_mirror", kauffman(d.mirrored(), opts) == f.conjugate(0), "F(mirror) = F with a -> 1/a"});
    bool k_ok = true;
    for (int x = 0; x < d.crossing_count() && k_ok; ++x) k_ok = kauffman_relation_holds(d, x, opts);
    out.push_back({"kauffman_skein", k_ok, "four-term relation at every crossing"});
  }
  return out;
}

}  // namespace skein

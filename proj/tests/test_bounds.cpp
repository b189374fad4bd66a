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

#include <doctest.h>

#include "skein/bounds.hpp"
#include "skein/families.hpp"
#include "skein/homfly.hpp"
#include "skein/kauffman.hpp"
#include "support.hpp"

using namespace skein;
using skein::testing::oracle_poly;

TEST_CASE("bounds report of the trefoil") {
  BoundsReport r = bounds_report(oracle_poly("P_trefoil"), oracle_poly("F_trefoil"), 1);
  CHECK(r.mindeg_l == 2);
  CHECK(r.maxdeg_l == 4);
  CHECK(r.span_l == 2);
  CHECK(r.maxdeg_m == 2);
  CHECK(r.mfw_lower == Ratio(2));
  CHECK(r.morton_genus_lower == Ratio(1));
  CHECK(r.tau_prime_upper == 1);
  CHECK(r.tau_prime_upper_mirror == -5);
  CHECK(r.maxdeg_a == -2);
  CHECK(r.pf_holds == true);
  CHECK(r.bennequin_slack == 0);
}

TEST_CASE("bounds report of the figure-eight and unknot") {
  BoundsReport f = bounds_report(oracle_poly("P_figure_eight"));
  CHECK(f.span_l == 4);
  CHECK(f.mfw_lower == Ratio(3));
  CHECK(f.tau_prime_upper == -3);
  CHECK(f.tau_prime_upper_mirror == -3);
  CHECK_FALSE(f.maxdeg_a.has_value());
  CHECK_FALSE(f.pf_holds.has_value());

  BoundsReport u = bounds_report(Laurent2::constant(1));
  CHECK(u.mfw_lower == Ratio(1));
  CHECK(u.tau_prime_upper == -1);

  CHECK_THROWS(bounds_report(oracle_poly("P_unlink2")));
}

TEST_CASE("report serialization") {
  BoundsReport r = bounds_report(oracle_poly("P_trefoil"), oracle_poly("F_trefoil"), 1);
  CHECK(bounds_from_json(to_json(r)) == r);
  BoundsReport f = bounds_report(oracle_poly("P_figure_eight"));
  CHECK(bounds_from_json(to_json(f)) == f);
  CHECK(to_string(Ratio(3, 2)) == "3/2");
  CHECK(to_string(Ratio(2)) == "2");
  CHECK(ceil(Ratio(3, 2)) == 2);
  CHECK(ceil(Ratio(-3, 2)) == -1);
  const std::string text = to_text(f);
  CHECK(text.find("mfw_lower=3") != std::string::npos);
  CHECK(text.find("maxdeg_a=none") != std::string::npos);
}

TEST_CASE("Bennequin checks") {
  BennequinCheck t = bennequin_check({1, 0}, 1, oracle_poly("P_trefoil"));
  CHECK(t.bi_slack == 0);
  CHECK(t.tbm_slack == 0);
  CHECK(t.consistent);

  BennequinCheck u = bennequin_check({-1, 0}, 0, Laurent2::constant(1));
  CHECK(u.bi_slack == 0);
  CHECK(u.consistent);

  BennequinCheck n = bennequin_check({-6, 1}, 1, conjugate_l(oracle_poly("P_trefoil")));
  CHECK(n.bi_slack == 2 * 1 - 1 - (-6 + 1));
  CHECK(n.consistent);

  CHECK_FALSE(bennequin_check({3, 0}, 1, oracle_poly("P_trefoil")).consistent);
  CHECK_THROWS(bennequin_check({1, 0}, -1, oracle_poly("P_trefoil")));
  CHECK(slice_bennequin_slack({1, 0}, 1) == 0);
}

TEST_CASE("twist formula") {
  const Laurent2 p1 = Laurent2::parse("-2*l^2*m^0 + 1*l^2*m^2 + -1*l^4*m^0");
  const Laurent2 pinf = Laurent2::monomial(3, 1, 1);
  CHECK(twist_extend(p1, pinf, 0) == p1);
  CHECK(twist_extend(p1, pinf, 1) == (pinf.shifted(1, 1).scaled(-1) - p1.shifted(2, 0)));
  CHECK_THROWS(twist_extend(p1, pinf, -1));

  auto [seed, x] = twist_family_seed();
  REQUIRE(seed.sign(x) > 0);
  auto [sw, sm] = skein_triple(seed, x);
  const Laurent2 s1 = homfly(seed), sinf = homfly(sm);
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(twist_extend(s1, sinf, n) == homfly(twist_knot(2 * n + 1)));
  }
}

TEST_CASE("PF inequality") {
  CHECK(pf_check(oracle_poly("P_trefoil"), oracle_poly("F_trefoil")));
  CHECK_FALSE(pf_fails(oracle_poly("P_trefoil"), oracle_poly("F_trefoil")));
  CHECK_FALSE(pf_fails(oracle_poly("P_figure_eight"), oracle_poly("F_figure_eight")));
  // KnotScape numbering. Both knots fail on the mirror side only.
  for (const char* dt : {"4 10 12 16 18 2 -22 6 20 8 -24 -14", "4 12 14 18 16 -20 2 24 8 -22 -10 6"}) {
    CAPTURE(dt);
    Diagram k = parse_dt(dt);
    Laurent2 p = homfly(k), f = kauffman(k);
    CHECK(pf_fails(p, f));
    CHECK(pf_check(p, f));
    CHECK_FALSE(pf_check(conjugate_l(p), f.conjugate(0)));
  }
}

TEST_CASE("finiteness experiment shapes") {
  std::vector<Diagram> torus;
  for (int j = 1; j <= 5; ++j) torus.push_back(torus2(2 * j + 1));
  auto rows = finiteness_experiment(torus, 1);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].span_l == 2);
    CHECK(rows[i].genus_certified);
    if (i) CHECK(rows[i].genus > rows[i - 1].genus);
  }

  auto single = finiteness_experiment({testing::trefoil()}, 2);
  REQUIRE(single.size() == 1);
  CHECK(single[0].member == 0);
  Laurent2 factor = Laurent2::monomial(1, 2, 0) + Laurent2::constant(1);
  CHECK(single[0].max_abs_coeff == (factor.pow(2) * oracle_poly("P_trefoil")).max_abs_coeff());
}

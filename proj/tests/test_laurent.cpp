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

#include <random>

#include <doctest.h>

#include "skein/laurent.hpp"

using skein::Laurent2;
using skein::Rational;

namespace {

Laurent2 M(Laurent2::Coeff c, int e1, int e2 = 0) { return Laurent2::monomial(c, e1, e2); }

const Laurent2 kTrefoil = Laurent2::parse("-2*l^2*m^0 + 1*l^2*m^2 + -1*l^4*m^0");

Laurent2 random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-3, 3), coef(-4, 4), count(0, 5);
  std::vector<Laurent2::Term> terms;
  for (int i = count(rng); i > 0; --i) terms.push_back({exp(rng), exp(rng), coef(rng)});
  return Laurent2::from_terms(terms);
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK((M(1, 1) + M(1, 0)) * (M(1, 1) - M(1, 0)) == M(1, 2) - M(1, 0));
  CHECK(kTrefoil + Laurent2() == kTrefoil);
  CHECK(M(1, 2, 1) * M(1, -2, -1) == Laurent2::constant(1));
  CHECK(-kTrefoil + kTrefoil == Laurent2());
  CHECK(kTrefoil.scaled(3) == kTrefoil + kTrefoil + kTrefoil);
  CHECK(kTrefoil.shifted(-2, 1) == M(-2, 0, 1) + M(1, 0, 3) - M(1, 2, 1));
  CHECK((M(1, 1) + M(1, -1)).pow(2) == M(1, 2) + M(2, 0) + M(1, -2));
}

TEST_CASE("canonical text form round-trips") {
  CHECK(kTrefoil.to_string() == "-2*l^2*m^0 + 1*l^2*m^2 + -1*l^4*m^0");
  CHECK(Laurent2().to_string() == "0");
  CHECK(Laurent2::parse(kTrefoil.to_string()) == kTrefoil);
  Laurent2 f = Laurent2::parse("1*a^-5*z^1 + -1*a^-4*z^0", skein::kKauffmanVars);
  CHECK(f.to_string() == "1*a^-5*z^1 + -1*a^-4*z^0");
  CHECK_THROWS_AS(Laurent2::parse("2*l^"), std::invalid_argument);
}

TEST_CASE("coefficients and slices") {
  CHECK(kTrefoil.coeff(2, 2) == 1);
  CHECK(Laurent2().coeff(5, -1) == 0);
  CHECK(kTrefoil.coeff_in_var(1, 0) == M(-1, 4) + M(-2, 2));
  CHECK(kTrefoil.max_abs_coeff() == 2);
}

TEST_CASE("degrees") {
  CHECK(kTrefoil.degrees(0) == skein::Degrees{2, 4, 2});
  CHECK(Laurent2::constant(1).degrees(0) == skein::Degrees{0, 0, 0});
  CHECK_THROWS_AS(Laurent2().degrees(0), skein::ZeroPolynomial);
}

TEST_CASE("exact division") {
  CHECK((M(-1, 3) - M(1, 1)).exact_div(M(1, 1) + M(1, -1)) == M(-1, 2));
  CHECK((M(-1, 2) - M(1, 0)).exact_div(M(1, 1) + M(1, -1)) == M(-1, 1));
  CHECK_THROWS_AS((M(1, 1) + M(1, 0)).exact_div(M(1, 1) + M(1, -1)), skein::NonExactDivision);
  CHECK_THROWS_AS(kTrefoil.exact_div(Laurent2()), skein::ZeroPolynomial);
}

TEST_CASE("rational evaluation") {
  CHECK(kTrefoil.eval(2, Rational(-5, 2)) == 1);
  CHECK(Laurent2::constant(1).eval(7, Rational(1, 3)) == 1);
  CHECK_THROWS(M(1, -1, 1).eval(0, 1));
}

TEST_CASE("conjugation") {
  CHECK(skein::conjugate_l(kTrefoil) == M(-2, -2) + M(1, -2, 2) - M(1, -4));
  CHECK(skein::conjugate_l(skein::conjugate_l(kTrefoil)) == kTrefoil);
  Laurent2 fig8 = M(-1, -2) - M(1, 0) + M(1, 0, 2) - M(1, 2);
  CHECK(skein::conjugate_l(fig8) == fig8);
}

TEST_CASE("variables must agree") {
  Laurent2 f = Laurent2::constant(1, skein::kKauffmanVars);
  CHECK_THROWS_AS(f + kTrefoil, skein::VariableMismatch);
}

TEST_CASE("coefficient overflow is reported") {
  Laurent2 big = Laurent2::constant(INT64_MAX);
  CHECK_THROWS_AS(big + big, skein::CoefficientOverflow);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20260);
  for (int i = 0; i < 200; ++i) {
    Laurent2 p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK(skein::conjugate_l(p * q) == skein::conjugate_l(p) * skein::conjugate_l(q));
    CHECK(skein::conjugate_l(p + q) == skein::conjugate_l(p) + skein::conjugate_l(q));
    if (!q.is_zero()) CHECK((p * q).exact_div(q) == p);
    if (!p.is_zero() && !q.is_zero()) {
      for (int v : {0, 1})
        CHECK((p * q).degrees(v).mindeg == p.degrees(v).mindeg + q.degrees(v).mindeg);
    }
  }
}

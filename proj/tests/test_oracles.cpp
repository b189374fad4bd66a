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

#include <map>

#include <doctest.h>

#include "skein/codes.hpp"
#include "skein/homfly.hpp"
#include "skein/kauffman.hpp"
#include "support.hpp"

using namespace skein;
using skein::testing::oracle_poly;

TEST_CASE("frozen values agree with the committed oracle output") {
  auto rows = testing::read_pairs(testing::source_path("tests/oracles/oracle_values.tsv"));
  std::map<std::string, std::string> printed(rows.begin(), rows.end());
  CHECK(printed == testing::oracle_values());
}

TEST_CASE("engine matches the brute-force oracle") {
  CHECK(homfly(Diagram::unlink(1)).to_string() == testing::oracle_values().at("P_unknot"));
  CHECK(homfly(Diagram::unlink(2)).to_string() == testing::oracle_values().at("P_unlink2"));
  CHECK(homfly(testing::trefoil()).to_string() == testing::oracle_values().at("P_trefoil"));
  CHECK(homfly(testing::figure_eight()).to_string() == testing::oracle_values().at("P_figure_eight"));
  CHECK(kauffman(testing::trefoil()).to_string() == testing::oracle_values().at("F_trefoil"));
  CHECK(kauffman(testing::figure_eight()).to_string() == testing::oracle_values().at("F_figure_eight"));
}

TEST_CASE("reference polynomials for every knot up to ten crossings") {
  std::map<std::string, std::string> codes;
  for (const auto& [name, code] : testing::read_pairs(testing::source_path("data/knots_le10.tsv"))) codes[name] = code;
  int compared = 0;
  for (const auto& [name, rest] : testing::read_pairs(testing::source_path("tests/fixtures/reference_polys_le10.tsv"))) {
    CAPTURE(name);
    const auto tab = rest.find('\t');
    REQUIRE(codes.count(name));
    Diagram d = parse_diagram(codes[name]);
    CHECK(homfly(d) == testing::parse_triples(rest.substr(0, tab), kHomflyVars));
    CHECK(kauffman(d) == testing::parse_triples(rest.substr(tab + 1), kKauffmanVars));
    ++compared;
  }
  CHECK(compared == 249);
}

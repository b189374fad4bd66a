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

// Shared fixtures for the test binaries: data paths, the standard small
// diagrams, frozen oracle values and a seeded random diagram generator.

#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skein/codes.hpp"
#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

#ifndef SKEIN_SOURCE_DIR
#error "SKEIN_SOURCE_DIR must point at the repository root"
#endif

namespace skein::testing {

inline std::string source_path(const std::string& rel) { return std::string(SKEIN_SOURCE_DIR) + "/" + rel; }

inline constexpr const char* kTrefoilPd = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
inline constexpr const char* kFigureEightPd = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

inline Diagram trefoil() { return parse_pd(kTrefoilPd); }
inline Diagram figure_eight() { return parse_pd(kFigureEightPd); }

// Values printed by tests/oracles/skein_oracle.py, a memo-free sympy skein
// expansion written independently of the engine.
inline const std::map<std::string, std::string>& oracle_values() {
  static const std::map<std::string, std::string> values = {
      {"P_unknot", "1*l^0*m^0"},
      {"P_unlink2", "-1*l^-1*m^-1 + -1*l^1*m^-1"},
      {"P_trefoil", "-2*l^2*m^0 + 1*l^2*m^2 + -1*l^4*m^0"},
      {"P_figure_eight", "-1*l^-2*m^0 + -1*l^0*m^0 + 1*l^0*m^2 + -1*l^2*m^0"},
      {"F_trefoil", "1*a^-5*z^1 + -1*a^-4*z^0 + 1*a^-4*z^2 + 1*a^-3*z^1 + -2*a^-2*z^0 + 1*a^-2*z^2"},
      {"F_figure_eight",
       "-1*a^-2*z^0 + 1*a^-2*z^2 + -1*a^-1*z^1 + 1*a^-1*z^3 + -1*a^0*z^0 + 2*a^0*z^2 + -1*a^1*z^1 + "
       "1*a^1*z^3 + -1*a^2*z^0 + 1*a^2*z^2"},
  };
  return values;
}

inline Laurent2 oracle_poly(const std::string& name) {
  return Laurent2::parse(oracle_values().at(name), name[0] == 'F' ? kKauffmanVars : kHomflyVars);
}

// Tab-separated (name, code) rows such as data/knots_le10.tsv.
inline std::vector<std::pair<std::string, std::string>> read_pairs(const std::string& path) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    rows.emplace_back(line.substr(0, tab), tab == std::string::npos ? "" : line.substr(tab + 1));
  }
  return rows;
}

// Parses the "e1,e2,c e1,e2,c ..." term lists of the reference fixture.
inline Laurent2 parse_triples(const std::string& text, Vars vars) {
  std::vector<Laurent2::Term> terms;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    Laurent2::Term t{};
    char c1 = 0, c2 = 0;
    std::istringstream ts(tok);
    ts >> t.e1 >> c1 >> t.e2 >> c2 >> t.c;
    terms.push_back(t);
  }
  return Laurent2::from_terms(std::move(terms), vars);
}

// Random diagrams with at most `max_crossings` crossings. Half are closed
// braids on 2 to 4 strands (links included); the rest are small table knots
// with a random subset of crossings switched.
class DiagramGenerator {
 public:
  explicit DiagramGenerator(unsigned seed) : rng_(seed) {
    for (const auto& [name, code] : read_pairs(source_path("data/knots_le10.tsv"))) {
      Diagram d = parse_diagram(code);
      if (d.crossing_count() <= 8) table_.push_back({name, d});
    }
  }

  Diagram next(int max_crossings = 8) {
    if (table_.empty() || coin()) return random_braid(max_crossings);
    std::vector<std::size_t> fits;
    for (std::size_t i = 0; i < table_.size(); ++i)
      if (table_[i].second.crossing_count() <= max_crossings) fits.push_back(i);
    const auto& [name, base] = table_[fits[pick(fits.size())]];
    Diagram d = base;
    last_ = name + " switched at";
    for (int x = 0; x < d.crossing_count(); ++x) {
      if (!coin()) continue;
      d = d.switched(x);
      last_ += " " + std::to_string(x);
    }
    return d;
  }

  std::string last_description() const { return last_; }

 private:
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Diagram random_braid(int max_crossings) {
    const int strands = std::uniform_int_distribution<int>(2, 4)(rng_);
    const int length = std::uniform_int_distribution<int>(1, max_crossings)(rng_);
    std::ostringstream word;
    for (int i = 0; i < length; ++i) {
      int g = std::uniform_int_distribution<int>(1, strands - 1)(rng_);
      word << (i ? " " : "") << (coin() ? g : -g);
    }
    last_ = "braid: " + word.str();
    return parse_braid(word.str());
  }

  std::mt19937 rng_;
  std::vector<std::pair<std::string, Diagram>> table_;
  std::string last_;
};

}  // namespace skein::testing

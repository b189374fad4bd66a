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

// Text codes for diagrams. Grammars are documented in docs/formats.md.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skein/diagram.hpp"

namespace skein {

class ParseError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

/// `X[a,b,c,d] X[...] ...`, optionally wrapped as `PD[...]`.
Diagram parse_pd(std::string_view text);

/// Dowker-Thistlethwaite code: the even partners of 1, 3, 5, ...; a negative
/// entry marks a crossing where the even pass goes over.
Diagram parse_dt(std::string_view text);

/// Gauss code of a knot: each crossing k occurs once as +k (over) and once
/// as -k (under).
Diagram parse_gauss(std::string_view text);

/// Braid word with 1-indexed generators; i is sigma_i and -i its inverse.
/// Also accepts `s1`, `σ1`, `σ1^-1`, `σ1⁻¹`. Returns the closure.
Diagram parse_braid(std::string_view text);

/// One-line form `pd: ...`, `dt: ...`, `gauss: ...` or `braid: ...`.
Diagram parse_diagram(std::string_view line);

/// A passage through a crossing while walking a knot, used to rebuild a
/// planar diagram from a Gauss-type sequence.
struct Passage {
  int crossing;
  bool over;
};

/// Finds a planar embedding realizing the closed passage sequence and
/// returns the diagram. Throws ParseError if none exists.
Diagram realize_knot(const std::vector<Passage>& sequence);

}  // namespace skein

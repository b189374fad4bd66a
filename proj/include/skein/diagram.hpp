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
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One crossing in PD form. edges[0] is the incoming under-strand, edges[2]
/// the outgoing under-strand, and the four ends are listed clockwise. The
/// crossing is positive when the over-strand runs from edges[1] to edges[3].
struct Crossing {
  std::array<int, 4> edges;
  int sign;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// A pass through a crossing while walking a component.
struct Visit {
  int crossing;
  bool over;

  friend bool operator==(const Visit&, const Visit&) = default;
};

/// Oriented link diagram.
///
/// Internally each crossing x owns four slots 4x..4x+3 in clockwise order,
/// slot 4x is the incoming under-end and slot 4x+2 the outgoing under-end.
/// `link` pairs slot ends joined by an edge; each edge runs from an outgoing
/// slot to an incoming one. Crossing-free components are kept as a count.
/// Diagrams are immutable values; every operation returns a new diagram.
class Diagram {
 public:
  /// The crossing-free unknot.
  Diagram() = default;

  static Diagram unlink(int components);

  /// Builds from PD tuples; labels are arbitrary integers, each occurring
  /// exactly twice. Throws DiagramError on bad incidence, inconsistent
  /// orientation, or a non-planar incidence structure.
  static Diagram from_pd(const std::vector<std::array<int, 4>>& pd);

  /// Builds from a slot graph. `dir[s]` is +1 for an incoming end, -1 for an
  /// outgoing end, 0 if unknown. With `strict`, every known direction is
  /// enforced and components without any known direction are oriented so
  /// their smallest slot is incoming; without `strict`, only the direction
  /// at each component's smallest slot is used as a hint. The under-strand of
  /// crossing x occupies slots 4x and 4x+2 in either direction.
  static Diagram from_slots(std::vector<int> link, std::vector<int> dir, int free_loops, bool strict = true);

  int crossing_count() const noexcept { return static_cast<int>(sign_.size()); }
  int component_count() const;
  int free_loops() const noexcept { return free_loops_; }
  int writhe() const;
  int sign(int crossing) const { return sign_.at(static_cast<std::size_t>(crossing)); }
  bool is_knot() const { return component_count() == 1; }

  /// PD tuples with edges relabeled 1..E along the traversal order.
  std::vector<Crossing> crossings() const;
  std::string to_pd_string() const;
  /// Edge label (as used by crossings()) of the edge at each slot.
  std::vector<int> slot_labels() const;

  /// Each non-free component as the ordered list of crossing passes. The
  /// traversal starts at the lowest unvisited incoming slot.
  std::vector<std::vector<Visit>> traversal() const;

  Diagram switched(int crossing) const;
  /// Orientation-preserving smoothing.
  Diagram smoothed(int crossing) const;
  /// The other smoothing; the result is re-oriented (orientation of the
  /// pieces is not determined by the input).
  Diagram smoothed_unoriented(int crossing) const;
  /// Obverse: reflection of the projection plane, which flips every sign.
  Diagram mirrored() const;

  /// Raw slot graph access, used by builders and analyses.
  const std::vector<int>& slot_links() const noexcept { return link_; }
  /// Incoming slot of the over-strand at crossing x.
  int over_in_slot(int x) const { return 4 * x + (sign_[static_cast<std::size_t>(x)] > 0 ? 1 : 3); }
  int over_out_slot(int x) const { return 4 * x + (sign_[static_cast<std::size_t>(x)] > 0 ? 3 : 1); }
  /// +1 if slot s is an incoming end.
  int slot_dir(int s) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<int> link_;
  std::vector<int> sign_;
  int free_loops_ = 1;
};

/// Joins D1 and D2 by cutting the first edge of each and reconnecting.
Diagram connected_sum(const Diagram& d1, const Diagram& d2);

}  // namespace skein

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

// Machinery shared by the HOMFLY and Kauffman evaluators: a compact signed
// Gauss code, the crossing rewrites used by skein relations, canonical keys
// for memoization and a concurrent memo cache.

#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

/// Signed, oriented Gauss code. Skein evaluation never needs the planar
/// embedding: switching and both smoothings are expressible on this data.
struct GaussCode {
  std::vector<std::vector<Visit>> components;
  std::vector<int> signs;
  int free_loops = 0;

  static GaussCode from_diagram(const Diagram& d);

  int crossing_count() const noexcept { return static_cast<int>(signs.size()); }
  int writhe() const;
};

GaussCode switch_crossing(const GaussCode& g, int x);
/// L0: arriving on the over-strand, leave on the under-strand (and back).
GaussCode smooth_oriented(const GaussCode& g, int x);
/// L-infinity: the smoothing that joins the two incoming ends; one side of the
/// result is traversed backwards and crossing signs are updated accordingly.
GaussCode smooth_unoriented(const GaussCode& g, int x);

/// Removes every crossing whose two passes are adjacent on one component
/// (a Reidemeister I curl). Returns the sum of the removed signs.
int strip_curls(GaussCode& g);

/// First crossing met from below along the component order, if any. A code
/// without one is descending and represents an unlink.
std::optional<int> first_ascending_crossing(const GaussCode& g);

/// Relabeling-invariant key (minimal over starting points; exact for knots,
/// deterministic and collision-free for links).
std::string canonical_key(const GaussCode& g);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Memo table keyed by canonical_key. Sharded so census workers can share
/// it; insertion is insert-if-absent, so concurrent writers agree.
class SkeinCache {
 public:
  std::optional<Laurent2> find(const std::string& key) const;
  void insert(const std::string& key, const Laurent2& value);
  std::size_t size() const;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<std::string, Laurent2> map;
  };
  Shard& shard(const std::string& key) const;
  mutable std::array<Shard, kShards> shards_;
};

struct SkeinOptions {
  /// Maximum number of expanded skein nodes per evaluation.
  std::uint64_t budget = 10'000'000;
  /// Shared memo; a private cache is used when null.
  SkeinCache* cache = nullptr;
  /// When set, receives the number of expanded nodes.
  std::uint64_t* nodes_out = nullptr;
};

/// A diagram queued for evaluation, with the scalar pulled out while
/// normalizing it (curls, free loops) and its memo key.
struct SkeinNode {
  GaussCode diagram;
  Laurent2 scalar;
  std::string canonical_key;
};

}  // namespace skein

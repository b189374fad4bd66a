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

// Memoized skein-tree driver shared by the HOMFLY and Kauffman evaluators.
// A Rules type supplies the relation-specific parts:
//   Vars vars;
//   Laurent2 loop;                                 value of a split unknot
//   Laurent2 curl(int removed_writhe) const;       factor for stripped curls
//   Laurent2 descending(const GaussCode&) const;   closed form for unlinks
//   template <class Eval> Laurent2 expand(const GaussCode&, int x, Eval&&) const;

#pragma once

#include <string>
#include <unordered_map>
#include <utility>

#include "skein/skein_tree.hpp"

namespace skein::detail {

template <class Rules>
class SkeinEvaluator {
 public:
  SkeinEvaluator(const SkeinOptions& opts, Rules rules) : opts_(opts), rules_(std::move(rules)) {}

  Laurent2 operator()(GaussCode g) {
    Laurent2 scalar = rules_.curl(strip_curls(g));
    if (g.components.empty()) return scalar * rules_.loop.pow(static_cast<unsigned>(g.free_loops - 1));
    if (g.free_loops > 0) {
      scalar *= rules_.loop.pow(static_cast<unsigned>(g.free_loops));
      g.free_loops = 0;
    }
    std::string key = canonical_key(g);
    if (auto hit = lookup(key)) return scalar * *hit;

    if (++nodes_ > opts_.budget) throw BudgetExceeded("skein node budget of " + std::to_string(opts_.budget) + " exceeded");
    if (opts_.nodes_out) *opts_.nodes_out = nodes_;

    Laurent2 value(rules_.vars);
    if (auto x = first_ascending_crossing(g)) {
      value = rules_.expand(g, *x, [this](GaussCode child) { return (*this)(std::move(child)); });
    } else {
      value = rules_.descending(g);
    }
    store(key, value);
    return scalar * value;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::optional<Laurent2> lookup(const std::string& key) const {
    if (opts_.cache) return opts_.cache->find(key);
    auto it = local_.find(key);
    if (it == local_.end()) return std::nullopt;
    return it->second;
  }

  void store(const std::string& key, const Laurent2& value) {
    if (opts_.cache)
      opts_.cache->insert(key, value);
    else
      local_.try_emplace(key, value);
  }

  const SkeinOptions& opts_;
  Rules rules_;
  std::unordered_map<std::string, Laurent2> local_;
  std::uint64_t nodes_ = 0;
};

}  // namespace skein::detail

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

#include "skein/skein_tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace skein {

namespace {

struct Position {
  int comp;
  int index;
};

// Both passes of crossing x: [0] is the over pass, [1] the under pass.
std::array<Position, 2> locate(const GaussCode& g, int x) {
  std::array<Position, 2> at{{{-1, -1}, {-1, -1}}};
  for (int c = 0; c < static_cast<int>(g.components.size()); ++c) {
    const auto& comp = g.components[c];
    for (int i = 0; i < static_cast<int>(comp.size()); ++i)
      if (comp[i].crossing == x) at[comp[i].over ? 0 : 1] = {c, i};
  }
  return at;
}

// comp rotated to start just after index i, without the element at i.
std::vector<Visit> after(const std::vector<Visit>& comp, int i) {
  std::vector<Visit> out;
  out.reserve(comp.size());
  for (std::size_t k = 1; k < comp.size(); ++k) out.push_back(comp[(i + k) % comp.size()]);
  return out;
}

// Drops crossing x (whose passes are already gone) from the numbering and
// turns empty components into free loops.
void compact(GaussCode& g, int x) {
  g.signs.erase(g.signs.begin() + x);
  std::vector<std::vector<Visit>> comps;
  comps.reserve(g.components.size());
  for (auto& comp : g.components) {
    if (comp.empty()) {
      ++g.free_loops;
      continue;
    }
    for (Visit& v : comp)
      if (v.crossing > x) --v.crossing;
    comps.push_back(std::move(comp));
  }
  g.components = std::move(comps);
}

void flip_signs_of_segment(GaussCode& g, const std::vector<Visit>& segment) {
  std::vector<int> hits(g.signs.size(), 0);
  for (const Visit& v : segment) ++hits[v.crossing];
  for (std::size_t y = 0; y < hits.size(); ++y)
    if (hits[y] == 1) g.signs[y] = -g.signs[y];
}

}  // namespace

GaussCode GaussCode::from_diagram(const Diagram& d) {
  GaussCode g;
  g.components = d.traversal();
  g.signs.resize(static_cast<std::size_t>(d.crossing_count()));
  for (int x = 0; x < d.crossing_count(); ++x) g.signs[x] = d.sign(x);
  g.free_loops = d.free_loops();
  return g;
}

int GaussCode::writhe() const { return std::accumulate(signs.begin(), signs.end(), 0); }

GaussCode switch_crossing(const GaussCode& g, int x) {
  GaussCode out = g;
  for (auto& comp : out.components)
    for (Visit& v : comp)
      if (v.crossing == x) v.over = !v.over;
  out.signs[x] = -out.signs[x];
  return out;
}

GaussCode smooth_oriented(const GaussCode& g, int x) {
  auto [o, u] = locate(g, x);
  GaussCode out = g;
  if (o.comp == u.comp) {
    const auto& comp = g.components[o.comp];
    std::vector<Visit> r = after(comp, o.index);  // r[j] is the under pass
    auto j = static_cast<std::size_t>((u.index - o.index - 1 + static_cast<int>(comp.size())) %
                                      static_cast<int>(comp.size()));
    std::vector<Visit> first(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<Visit> second(r.begin() + static_cast<std::ptrdiff_t>(j) + 1, r.end());
    out.components[o.comp] = std::move(first);
    out.components.insert(out.components.begin() + o.comp + 1, std::move(second));
  } else {
    std::vector<Visit> merged = after(g.components[u.comp], u.index);
    auto tail = after(g.components[o.comp], o.index);
    merged.insert(merged.end(), tail.begin(), tail.end());
    int keep = std::min(o.comp, u.comp), drop = std::max(o.comp, u.comp);
    out.components[keep] = std::move(merged);
    out.components.erase(out.components.begin() + drop);
  }
  compact(out, x);
  return out;
}

GaussCode smooth_unoriented(const GaussCode& g, int x) {
  auto [o, u] = locate(g, x);
  GaussCode out = g;
  std::vector<Visit> reversed;
  if (o.comp == u.comp) {
    const auto& comp = g.components[o.comp];
    std::vector<Visit> r = after(comp, o.index);
    auto j = static_cast<std::size_t>((u.index - o.index - 1 + static_cast<int>(comp.size())) %
                                      static_cast<int>(comp.size()));
    // Run the part after the under pass forwards, then the part between the
    // passes backwards.
    reversed.assign(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(j));
    std::vector<Visit> joined(r.begin() + static_cast<std::ptrdiff_t>(j) + 1, r.end());
    joined.insert(joined.end(), reversed.rbegin(), reversed.rend());
    out.components[o.comp] = std::move(joined);
  } else {
    std::vector<Visit> joined = after(g.components[o.comp], o.index);
    reversed = after(g.components[u.comp], u.index);
    joined.insert(joined.end(), reversed.rbegin(), reversed.rend());
    int keep = std::min(o.comp, u.comp), drop = std::max(o.comp, u.comp);
    out.components[keep] = std::move(joined);
    out.components.erase(out.components.begin() + drop);
  }
  flip_signs_of_segment(out, reversed);
  compact(out, x);
  return out;
}

int strip_curls(GaussCode& g) {
  int removed_writhe = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& comp : g.components) {
      const std::size_t n = comp.size();
      for (std::size_t i = 0; i < n && n >= 2; ++i) {
        if (comp[i].crossing != comp[(i + 1) % n].crossing) continue;
        int x = comp[i].crossing;
        removed_writhe += g.signs[x];
        std::erase_if(comp, [x](const Visit& v) { return v.crossing == x; });
        compact(g, x);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return removed_writhe;
}

std::optional<int> first_ascending_crossing(const GaussCode& g) {
  std::vector<char> seen(g.signs.size(), 0);
  for (const auto& comp : g.components) {
    for (const Visit& v : comp) {
      if (seen[v.crossing]) continue;
      if (!v.over) return v.crossing;
      seen[v.crossing] = 1;
    }
  }
  return std::nullopt;
}

namespace {

class KeyBuilder {
 public:
  explicit KeyBuilder(const GaussCode& g) : g_(g) {
    const int c = g.crossing_count();
    where_.assign(static_cast<std::size_t>(c), {});
    for (int k = 0; k < static_cast<int>(g.components.size()); ++k) {
      const auto& comp = g.components[k];
      for (int i = 0; i < static_cast<int>(comp.size()); ++i) where_[comp[i].crossing][comp[i].over] = {k, i};
    }
  }

  std::vector<int> encode(Position start) const {
    const int c = g_.crossing_count();
    std::vector<int> label(static_cast<std::size_t>(c), -1), by_label;
    std::vector<char> used(g_.components.size(), 0);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(3 * c + 4));
    emit(start, label, by_label, used, out);
    for (std::size_t done = 1; done < g_.components.size(); ++done) {
      std::optional<Position> next;
      for (int y : by_label) {
        for (const Position& p : where_[y])
          if (!used[p.comp]) {
            next = p;
            break;
          }
        if (next) break;
      }
      if (!next) next = best_split_start(label, by_label, used);
      emit(*next, label, by_label, used, out);
    }
    for (int y : by_label) out.push_back(g_.signs[y]);
    return out;
  }

 private:
  void emit(Position p, std::vector<int>& label, std::vector<int>& by_label, std::vector<char>& used,
            std::vector<int>& out) const {
    const auto& comp = g_.components[p.comp];
    used[p.comp] = 1;
    out.push_back(-1 - static_cast<int>(comp.size()));
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const Visit& v = comp[(p.index + k) % comp.size()];
      if (label[v.crossing] < 0) {
        label[v.crossing] = static_cast<int>(by_label.size());
        by_label.push_back(v.crossing);
      }
      out.push_back(2 * label[v.crossing] + (v.over ? 1 : 0));
    }
  }

  // Split remainder: pick the start giving the smallest encoding of that
  // component on its own.
  Position best_split_start(const std::vector<int>& label, const std::vector<int>& by_label,
                            const std::vector<char>& used) const {
    std::optional<std::vector<int>> best;
    Position best_pos{-1, -1};
    for (int k = 0; k < static_cast<int>(g_.components.size()); ++k) {
      if (used[k]) continue;
      for (int i = 0; i < static_cast<int>(g_.components[k].size()); ++i) {
        std::vector<int> lab = label, bl = by_label, tmp;
        std::vector<char> u = used;
        emit({k, i}, lab, bl, u, tmp);
        if (!best || tmp < *best) {
          best = std::move(tmp);
          best_pos = {k, i};
        }
      }
    }
    return best_pos;
  }

  const GaussCode& g_;
  std::vector<std::array<Position, 2>> where_;
};

}  // namespace

std::string canonical_key(const GaussCode& g) {
  std::vector<int> best;
  if (!g.components.empty()) {
    KeyBuilder builder(g);
    bool have = false;
    for (int k = 0; k < static_cast<int>(g.components.size()); ++k) {
      for (int i = 0; i < static_cast<int>(g.components[k].size()); ++i) {
        auto enc = builder.encode({k, i});
        if (!have || enc < best) {
          best = std::move(enc);
          have = true;
        }
      }
    }
  }
  std::string key;
  key.reserve(best.size() * 2 + 4);
  auto put = [&key](int v) {
    // Zig-zag varint; values are small.
    auto z = static_cast<std::uint32_t>((v << 1) ^ (v >> 31));
    while (z >= 0x80) {
      key.push_back(static_cast<char>(z | 0x80));
      z >>= 7;
    }
    key.push_back(static_cast<char>(z));
  };
  put(g.free_loops);
  for (int v : best) put(v);
  return key;
}

SkeinCache::Shard& SkeinCache::shard(const std::string& key) const {
  return shards_[std::hash<std::string>{}(key) % kShards];
}

std::optional<Laurent2> SkeinCache::find(const std::string& key) const {
  Shard& s = shard(key);
  std::lock_guard lock(s.mu);
  auto it = s.map.find(key);
  if (it == s.map.end()) return std::nullopt;
  return it->second;
}

void SkeinCache::insert(const std::string& key, const Laurent2& value) {
  Shard& s = shard(key);
  std::lock_guard lock(s.mu);
  s.map.try_emplace(key, value);
}

std::size_t SkeinCache::size() const {
  std::size_t n = 0;
  for (const Shard& s : shards_) {
    std::lock_guard lock(s.mu);
    n += s.map.size();
  }
  return n;
}

}  // namespace skein

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

#include "skein/diagram.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace skein {

namespace {

int opposite(int s) { return 4 * (s / 4) + (s % 4 + 2) % 4; }

int count_faces(const std::vector<int>& link) {
  const int n = static_cast<int>(link.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int faces = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++faces;
    for (int t = s; !seen[t];) {
      seen[t] = 1;
      int u = link[t];
      t = 4 * (u / 4) + (u % 4 + 1) % 4;
    }
  }
  return faces;
}

int count_pieces(const std::vector<int>& link) {
  const int c = static_cast<int>(link.size()) / 4;
  std::vector<int> parent(static_cast<std::size_t>(c));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int s = 0; s < 4 * c; ++s) parent[find(s / 4)] = find(link[s] / 4);
  int pieces = 0;
  for (int v = 0; v < c; ++v) pieces += find(v) == v;
  return pieces;
}

struct SlotGraph {
  std::vector<int> link;
  std::vector<int> dir;
  int free_loops = 0;
};

// Removes crossing x, joining its slot ends according to `mate` (a pairing of
// the local offsets 0..3). Closed chains through x alone become free loops.
SlotGraph splice(const std::vector<int>& link, const std::vector<int>& dir, int x, const std::array<int, 4>& mate,
                 int free_loops) {
  SlotGraph g{link, dir, free_loops};
  auto inside = [x](int s) { return s / 4 == x; };
  std::array<bool, 4> done{};
  for (int k = 0; k < 4; ++k) {
    int p = 4 * x + k;
    if (done[k] || inside(link[p])) continue;
    int end_a = link[p];
    for (int cur = p;;) {
      done[cur % 4] = true;
      int q = 4 * x + mate[cur % 4];
      done[q % 4] = true;
      int nxt = link[q];
      if (!inside(nxt)) {
        g.link[end_a] = nxt;
        g.link[nxt] = end_a;
        break;
      }
      cur = nxt;
    }
  }
  for (int k = 0; k < 4; ++k) {
    if (done[k]) continue;
    ++g.free_loops;
    for (int cur = 4 * x + k; !done[cur % 4];) {
      done[cur % 4] = true;
      int q = 4 * x + mate[cur % 4];
      done[q % 4] = true;
      cur = link[q];
    }
  }
  // Drop the four slots of x and shift the later ones down.
  const int n = static_cast<int>(link.size());
  std::vector<int> nl, nd;
  nl.reserve(static_cast<std::size_t>(n - 4));
  nd.reserve(static_cast<std::size_t>(n - 4));
  auto shift = [x](int s) { return s > 4 * x + 3 ? s - 4 : s; };
  for (int s = 0; s < n; ++s) {
    if (inside(s)) continue;
    nl.push_back(shift(g.link[s]));
    nd.push_back(g.dir[s]);
  }
  g.link = std::move(nl);
  g.dir = std::move(nd);
  return g;
}

// Applies a per-crossing relabeling of slots: new local slot k of crossing x
// is old local slot perm[x][k].
SlotGraph permute_slots(const std::vector<int>& link, const std::vector<int>& dir,
                        const std::vector<std::array<int, 4>>& perm) {
  const int n = static_cast<int>(link.size());
  std::vector<int> old_to_new(static_cast<std::size_t>(n));
  for (int x = 0; x < n / 4; ++x)
    for (int k = 0; k < 4; ++k) old_to_new[4 * x + perm[x][k]] = 4 * x + k;
  SlotGraph g{std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n)), 0};
  for (int s = 0; s < n; ++s) {
    g.link[old_to_new[s]] = old_to_new[link[s]];
    g.dir[old_to_new[s]] = dir[s];
  }
  return g;
}

std::vector<std::array<int, 4>> identity_perm(int c) { return std::vector<std::array<int, 4>>(c, {0, 1, 2, 3}); }

}  // namespace

Diagram Diagram::unlink(int components) {
  if (components < 1) throw DiagramError("an unlink needs at least one component");
  Diagram d;
  d.free_loops_ = components;
  return d;
}

Diagram Diagram::from_slots(std::vector<int> link, std::vector<int> dir, int free_loops, bool strict) {
  const int n = static_cast<int>(link.size());
  if (n % 4 != 0 || static_cast<int>(dir.size()) != n) throw DiagramError("slot arrays must cover whole crossings");
  for (int s = 0; s < n; ++s) {
    if (link[s] < 0 || link[s] >= n || link[s] == s || link[link[s]] != s) {
      throw DiagramError("edge incidence is not a perfect pairing of crossing ends");
    }
  }
  // Orient component by component. rel[] is the direction relative to the
  // component's smallest slot taken as incoming.
  std::vector<int> rel(static_cast<std::size_t>(n), 0), out_dir(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < n; ++s) {
    if (rel[s] != 0) continue;
    std::vector<int> members;
    for (int cur = s;;) {
      rel[cur] = 1;
      int o = opposite(cur);
      rel[o] = -1;
      members.push_back(cur);
      members.push_back(o);
      cur = link[o];
      if (cur == s) break;
      if (rel[cur] != 0) throw DiagramError("edge incidence does not close into oriented components");
    }
    int f = 0;
    if (strict) {
      for (int t : members) {
        if (dir[t] == 0) continue;
        int want = dir[t] * rel[t];
        if (f != 0 && want != f) throw DiagramError("inconsistent strand orientation");
        f = want;
      }
    } else if (dir[s] != 0) {
      f = dir[s];
    }
    if (f == 0) f = 1;
    for (int t : members) out_dir[t] = f * rel[t];
  }

  // Rotate crossings whose under-strand enters at local slot 2.
  auto perm = identity_perm(n / 4);
  for (int x = 0; x < n / 4; ++x)
    if (out_dir[4 * x] < 0) perm[x] = {2, 3, 0, 1};
  SlotGraph g = permute_slots(link, out_dir, perm);

  Diagram d;
  d.link_ = std::move(g.link);
  d.free_loops_ = free_loops;
  d.sign_.resize(static_cast<std::size_t>(n / 4));
  for (int x = 0; x < n / 4; ++x) d.sign_[x] = g.dir[4 * x + 1] > 0 ? 1 : -1;
  if (d.sign_.empty() && d.free_loops_ == 0) throw DiagramError("empty diagram");
  return d;
}

Diagram Diagram::from_pd(const std::vector<std::array<int, 4>>& pd) {
  if (pd.empty()) return Diagram();
  const int c = static_cast<int>(pd.size());
  std::map<int, std::vector<int>> where;
  for (int x = 0; x < c; ++x)
    for (int k = 0; k < 4; ++k) where[pd[x][k]].push_back(4 * x + k);
  std::vector<int> link(static_cast<std::size_t>(4 * c), -1);
  for (const auto& [label, slots] : where) {
    if (slots.size() != 2) {
      throw DiagramError("edge label " + std::to_string(label) + " occurs " + std::to_string(slots.size()) +
                         " times (expected 2)");
    }
    link[slots[0]] = slots[1];
    link[slots[1]] = slots[0];
  }
  std::vector<int> dir(static_cast<std::size_t>(4 * c), 0);
  for (int x = 0; x < c; ++x) {
    dir[4 * x] = 1;
    dir[4 * x + 2] = -1;
  }
  // Components that never pass under are oriented by the label order of the
  // over-strand at their first crossing: b -> d when d follows b.
  std::vector<char> seen(static_cast<std::size_t>(4 * c), 0);
  for (int s = 0; s < 4 * c; ++s) {
    if (seen[s]) continue;
    bool seeded = false;
    for (int cur = s;;) {
      seen[cur] = seen[opposite(cur)] = 1;
      seeded = seeded || cur % 2 == 0;
      cur = link[opposite(cur)];
      if (cur == s) break;
      if (seen[cur]) throw DiagramError("edge incidence does not close into oriented components");
    }
    if (seeded) continue;
    int x = s / 4;
    int b = pd[x][1], d = pd[x][3];
    bool b_to_d = (d - b == 1) || (b - d > 1);
    dir[4 * x + 1] = b_to_d ? 1 : -1;
  }
  Diagram diagram = from_slots(std::move(link), std::move(dir), 0, true);
  const int faces = count_faces(diagram.link_);
  if (faces != 2 * c - c + 2 * count_pieces(diagram.link_)) {
    throw DiagramError("PD code is not planar (" + std::to_string(faces) + " faces for " + std::to_string(c) +
                       " crossings)");
  }
  return diagram;
}

int Diagram::slot_dir(int s) const {
  int k = s % 4;
  if (k == 0) return 1;
  if (k == 2) return -1;
  return s == over_in_slot(s / 4) ? 1 : -1;
}

int Diagram::component_count() const { return static_cast<int>(traversal().size()) + free_loops_; }

int Diagram::writhe() const { return std::accumulate(sign_.begin(), sign_.end(), 0); }

std::vector<std::vector<Visit>> Diagram::traversal() const {
  std::vector<std::vector<Visit>> comps;
  std::vector<char> seen(link_.size(), 0);
  for (int x = 0; x < crossing_count(); ++x) {
    for (int start : {4 * x, over_in_slot(x)}) {
      if (seen[start]) continue;
      std::vector<Visit> comp;
      for (int s = start; !seen[s];) {
        seen[s] = 1;
        comp.push_back({s / 4, s % 4 != 0});
        s = link_[opposite(s)];
      }
      comps.push_back(std::move(comp));
    }
  }
  return comps;
}

std::vector<int> Diagram::slot_labels() const {
  std::vector<int> label(link_.size(), 0);
  std::vector<char> seen(link_.size(), 0);
  int next = 1;
  for (int x = 0; x < crossing_count(); ++x) {
    for (int start : {4 * x, over_in_slot(x)}) {
      if (seen[start]) continue;
      for (int s = start; !seen[s];) {
        seen[s] = 1;
        label[s] = label[link_[s]] = next++;
        s = link_[opposite(s)];
      }
    }
  }
  return label;
}

std::vector<Crossing> Diagram::crossings() const {
  std::vector<int> label = slot_labels();
  std::vector<Crossing> out;
  for (int x = 0; x < crossing_count(); ++x)
    out.push_back({{label[4 * x], label[4 * x + 1], label[4 * x + 2], label[4 * x + 3]}, sign_[x]});
  return out;
}

std::string Diagram::to_pd_string() const {
  std::ostringstream os;
  bool first = true;
  for (const Crossing& c : crossings()) {
    if (!first) os << ' ';
    first = false;
    os << "X[" << c.edges[0] << ',' << c.edges[1] << ',' << c.edges[2] << ',' << c.edges[3] << ']';
  }
  return os.str();
}

namespace {

std::vector<int> all_dirs(const Diagram& d) {
  std::vector<int> dir(d.slot_links().size());
  for (std::size_t s = 0; s < dir.size(); ++s) dir[s] = d.slot_dir(static_cast<int>(s));
  return dir;
}

void check_crossing(const Diagram& d, int x) {
  if (x < 0 || x >= d.crossing_count()) {
    throw DiagramError("crossing id " + std::to_string(x) + " out of range [0, " +
                       std::to_string(d.crossing_count()) + ")");
  }
}

}  // namespace

Diagram Diagram::switched(int x) const {
  check_crossing(*this, x);
  auto perm = identity_perm(crossing_count());
  perm[x] = sign_[x] > 0 ? std::array<int, 4>{1, 2, 3, 0} : std::array<int, 4>{3, 0, 1, 2};
  SlotGraph g = permute_slots(link_, all_dirs(*this), perm);
  return from_slots(std::move(g.link), std::move(g.dir), free_loops_, true);
}

Diagram Diagram::smoothed(int x) const {
  check_crossing(*this, x);
  int oi = over_in_slot(x) % 4, oo = over_out_slot(x) % 4;
  std::array<int, 4> mate{};
  mate[0] = oo;
  mate[oo] = 0;
  mate[oi] = 2;
  mate[2] = oi;
  SlotGraph g = splice(link_, all_dirs(*this), x, mate, free_loops_);
  return from_slots(std::move(g.link), std::move(g.dir), g.free_loops, true);
}

Diagram Diagram::smoothed_unoriented(int x) const {
  check_crossing(*this, x);
  int oi = over_in_slot(x) % 4, oo = over_out_slot(x) % 4;
  std::array<int, 4> mate{};
  mate[0] = oi;
  mate[oi] = 0;
  mate[oo] = 2;
  mate[2] = oo;
  SlotGraph g = splice(link_, all_dirs(*this), x, mate, free_loops_);
  return from_slots(std::move(g.link), std::move(g.dir), g.free_loops, false);
}

Diagram Diagram::mirrored() const {
  std::vector<std::array<int, 4>> perm(sign_.size(), {0, 3, 2, 1});
  SlotGraph g = permute_slots(link_, all_dirs(*this), perm);
  return from_slots(std::move(g.link), std::move(g.dir), free_loops_, true);
}

Diagram connected_sum(const Diagram& d1, const Diagram& d2) {
  if (d1.crossing_count() == 0 || d2.crossing_count() == 0) {
    // One summand of a crossing-free side merges into a component of the other.
    const Diagram& rich = d1.crossing_count() == 0 ? d2 : d1;
    const Diagram& bare = d1.crossing_count() == 0 ? d1 : d2;
    std::vector<int> dir(rich.slot_links().size());
    for (std::size_t s = 0; s < dir.size(); ++s) dir[s] = rich.slot_dir(static_cast<int>(s));
    return Diagram::from_slots(rich.slot_links(), dir, rich.free_loops() + bare.free_loops() - 1, true);
  }
  const int off = 4 * d1.crossing_count();
  std::vector<int> link(d1.slot_links());
  std::vector<int> dir(link.size());
  for (std::size_t s = 0; s < link.size(); ++s) dir[s] = d1.slot_dir(static_cast<int>(s));
  for (std::size_t s = 0; s < d2.slot_links().size(); ++s) {
    link.push_back(d2.slot_links()[s] + off);
    dir.push_back(d2.slot_dir(static_cast<int>(s)));
  }
  // Slot 0 of each first crossing is incoming; cut the edge that feeds it.
  int i1 = 0, o1 = link[0];
  int i2 = off, o2 = link[off];
  link[o1] = i2;
  link[i2] = o1;
  link[o2] = i1;
  link[i1] = o2;
  return Diagram::from_slots(std::move(link), std::move(dir), d1.free_loops() + d2.free_loops(), true);
}

}  // namespace skein

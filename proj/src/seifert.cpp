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

#include "skein/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace skein {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Biconnected components of a multigraph by Tarjan's edge-stack method.
// Parallel edges form a block together; only the tree edge itself is
// excluded when looking back at the parent.
class BlockFinder {
 public:
  BlockFinder(int vertices, const std::vector<SeifertEdge>& edges)
      : edges_(edges),
        adj_(static_cast<std::size_t>(vertices)),
        disc_(static_cast<std::size_t>(vertices), -1),
        low_(static_cast<std::size_t>(vertices), 0) {
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      adj_[edges[e].u].push_back(e);
      adj_[edges[e].v].push_back(e);
    }
  }

  std::vector<std::vector<int>> run() {
    for (int v = 0; v < static_cast<int>(adj_.size()); ++v)
      if (disc_[v] < 0) visit(v, -1);
    return blocks_;
  }

 private:
  void visit(int v, int via) {
    disc_[v] = low_[v] = time_++;
    for (int e : adj_[v]) {
      if (e == via) continue;
      int w = edges_[e].u == v ? edges_[e].v : edges_[e].u;
      if (disc_[w] < 0) {
        stack_.push_back(e);
        visit(w, e);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) pop_block(e);
      } else if (disc_[w] < disc_[v]) {
        stack_.push_back(e);
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  void pop_block(int until) {
    std::vector<int> block;
    for (;;) {
      int e = stack_.back();
      stack_.pop_back();
      block.push_back(edges_[e].crossing);
      if (e == until) break;
    }
    std::sort(block.begin(), block.end());
    blocks_.push_back(std::move(block));
  }

  const std::vector<SeifertEdge>& edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> disc_, low_, stack_;
  std::vector<std::vector<int>> blocks_;
  int time_ = 0;
};

}  // namespace

SeifertData seifert(const Diagram& d) {
  SeifertData out;
  const int c = d.crossing_count();
  const auto& link = d.slot_links();
  out.c = c;
  out.writhe = d.writhe();

  // Circles: edges glued through each crossing by the oriented smoothing,
  // which joins under-in to over-out and over-in to under-out.
  UnionFind uf(4 * c);
  for (int s = 0; s < 4 * c; ++s) uf.unite(s, link[s]);
  for (int x = 0; x < c; ++x) {
    uf.unite(4 * x, d.over_out_slot(x));
    uf.unite(d.over_in_slot(x), 4 * x + 2);
  }
  std::map<int, int> circle_of_root;
  std::vector<int> labels = d.slot_labels();
  std::vector<std::set<int>> circle_edges;
  for (int s = 0; s < 4 * c; ++s) {
    auto [it, fresh] = circle_of_root.try_emplace(uf.find(s), static_cast<int>(circle_of_root.size()));
    if (fresh) circle_edges.emplace_back();
    circle_edges[it->second].insert(labels[s]);
  }
  for (auto& edges : circle_edges) out.circles.emplace_back(edges.begin(), edges.end());
  for (int k = 0; k < d.free_loops(); ++k) out.circles.emplace_back();
  out.s = static_cast<int>(out.circles.size());

  for (int x = 0; x < c; ++x) {
    int sign = d.sign(x);
    out.graph.push_back({circle_of_root[uf.find(4 * x)], circle_of_root[uf.find(4 * x + 2)], sign, x});
    out.positive = out.positive && sign > 0;
    out.negative = out.negative && sign < 0;
  }
  out.blocks = BlockFinder(out.s, out.graph).run();
  for (const auto& block : out.blocks) {
    for (int x : block)
      if (d.sign(x) != d.sign(block.front())) out.homogeneous = false;
  }

  // Euler characteristic of the Seifert surface is s - c; it has one
  // boundary circle per link component and one piece per split part of the
  // diagram (connected pieces of the Seifert graph).
  UnionFind pieces(out.s);
  for (const SeifertEdge& e : out.graph) pieces.unite(e.u, e.v);
  int kappa = 0;
  for (int v = 0; v < out.s; ++v) kappa += pieces.find(v) == v;
  const int mu = d.component_count();
  out.genus = (c - out.s - mu + 2 * kappa) / 2;
  return out;
}

GenusVerdict certified_genus(const Diagram& d) {
  if (!d.is_knot()) throw DiagramError("certified genus needs a knot diagram");
  SeifertData s = seifert(d);
  return {s.genus, s.homogeneous};
}

}  // namespace skein

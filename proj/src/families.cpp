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

#include "skein/families.hpp"

#include <cstdlib>
#include <string>

#include "skein/codes.hpp"

namespace skein {

int WireBuilder::add_port() {
  adj_.emplace_back();
  return static_cast<int>(adj_.size()) - 1;
}

void WireBuilder::join(int a, int b) {
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

std::pair<std::vector<int>, int> WireBuilder::resolve() const {
  const int ports = static_cast<int>(adj_.size());
  for (int p = 0; p < ports; ++p) {
    std::size_t want = p < slots_ ? 1 : 2;
    if (adj_[p].size() != want) throw DiagramError("wire port " + std::to_string(p) + " is not fully connected");
  }
  std::vector<int> link(static_cast<std::size_t>(slots_), -1);
  std::vector<char> seen(static_cast<std::size_t>(ports), 0);
  for (int s = 0; s < slots_; ++s) {
    if (seen[s]) continue;
    int prev = s, cur = adj_[s][0];
    seen[s] = 1;
    while (cur >= slots_) {
      seen[cur] = 1;
      int nxt = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
      prev = cur;
      cur = nxt;
    }
    seen[cur] = 1;
    link[s] = cur;
    link[cur] = s;
  }
  int loops = 0;
  for (int p = slots_; p < ports; ++p) {
    if (seen[p]) continue;
    ++loops;
    for (int prev = -1, cur = p; !seen[cur];) {
      seen[cur] = 1;
      int nxt = adj_[cur][0] == prev ? adj_[cur][1] : adj_[cur][0];
      prev = cur;
      cur = nxt;
    }
  }
  return {link, loops};
}

Diagram pretzel(const std::vector<int>& columns) {
  if (columns.empty()) throw DiagramError("a pretzel needs at least one column");
  int total = 0;
  for (int p : columns) total += std::abs(p);
  WireBuilder wires(4 * total);

  // Each crossing has corners NW, NE, SE, SW (clockwise); the strands run
  // NW-SE and NE-SW. For p > 0 the NE-SW strand is under.
  enum Corner { NW, NE, SE, SW };
  struct Ends {
    int tl, tr, bl, br;
  };
  std::vector<Ends> ends;
  int base = 0;
  for (int p : columns) {
    const int n = std::abs(p);
    auto port = [&](int j, Corner k) {
      int local = p > 0 ? (static_cast<int>(k) + 3) % 4 : static_cast<int>(k);
      return 4 * (base + j) + local;
    };
    if (n == 0) {
      Ends e{wires.add_port(), wires.add_port(), wires.add_port(), wires.add_port()};
      wires.join(e.tl, e.bl);
      wires.join(e.tr, e.br);
      ends.push_back(e);
      continue;
    }
    for (int j = 0; j + 1 < n; ++j) {
      wires.join(port(j, SW), port(j + 1, NW));
      wires.join(port(j, SE), port(j + 1, NE));
    }
    ends.push_back({port(0, NW), port(0, NE), port(n - 1, SW), port(n - 1, SE)});
    base += n;
  }
  const std::size_t k = ends.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    wires.join(ends[i].tr, ends[i + 1].tl);
    wires.join(ends[i].br, ends[i + 1].bl);
  }
  wires.join(ends[0].tl, ends[k - 1].tr);
  wires.join(ends[0].bl, ends[k - 1].br);

  auto [link, loops] = wires.resolve();
  std::vector<int> dir(link.size(), 0);
  Diagram d = Diagram::from_slots(std::move(link), std::move(dir), loops, true);
  if (!d.is_knot()) throw DiagramError("pretzel parameters give a link, not a knot");
  return d;
}

Diagram pretzel(int p, int q, int r) { return pretzel(std::vector<int>{p, q, r}); }

Diagram torus2(int n) {
  if (n % 2 == 0) throw DiagramError("torus2(n) needs odd n to be a knot");
  std::string word;
  for (int k = 0; k < std::abs(n); ++k) word += n > 0 ? "1 " : "-1 ";
  return parse_braid(word);
}

Diagram twist_knot(int j) {
  if (j < 0) throw DiagramError("twist_knot(j) needs j >= 0");
  return pretzel(j, 1, 1);
}

std::pair<Diagram, int> twist_family_seed() { return {twist_knot(1), 0}; }

}  // namespace skein

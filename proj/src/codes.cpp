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

#include "skein/codes.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>

namespace skein {

namespace {

std::string_view trim(std::string_view v) {
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
  return v;
}

bool consume(std::string_view& v, std::string_view prefix) {
  if (v.substr(0, prefix.size()) != prefix) return false;
  v.remove_prefix(prefix.size());
  return true;
}

std::optional<int> read_int(std::string_view& v) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc()) return std::nullopt;
  v.remove_prefix(static_cast<std::size_t>(ptr - v.data()));
  return value;
}

// Splits on whitespace and commas, dropping enclosing brackets.
std::vector<std::string_view> tokens(std::string_view text) {
  text = trim(text);
  if (!text.empty() && (text.front() == '[' || text.front() == '(')) text.remove_prefix(1);
  if (!text.empty() && (text.back() == ']' || text.back() == ')')) text.remove_suffix(1);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char ch) { return ch == ',' || std::isspace(static_cast<unsigned char>(ch)); };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_whole_int(std::string_view tok, std::string_view what) {
  std::string_view rest = tok;
  if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
  auto v = read_int(rest);
  if (!v || !rest.empty()) throw ParseError("malformed " + std::string(what) + " entry '" + std::string(tok) + "'");
  return *v;
}

// Planar embedding search over the rotation systems of a 4-valent graph.
//
// Edge e runs from passage e to passage e+1. Its outgoing end has id 2e and
// its incoming end 2e+1, so the other end of h is h^1. At crossing x with
// passes p1 < p2 the ends are A (into p1), B (out of p1), C (into p2) and
// D (out of p2); straight-through pairs must be opposite, which leaves the
// clockwise orders [A,C,B,D] and [A,D,B,C].
class EmbeddingSearch {
 public:
  explicit EmbeddingSearch(const std::vector<Passage>& seq) : seq_(seq) {
    const int len = static_cast<int>(seq.size());
    n_ = len / 2;
    ends_.assign(static_cast<std::size_t>(n_), {});
    first_.assign(static_cast<std::size_t>(n_), -1);
    end_crossing_.assign(static_cast<std::size_t>(2 * len), -1);
    for (int p = 0; p < len; ++p) {
      int x = seq[p].crossing;
      int in_end = 2 * ((p - 1 + len) % len) + 1, out_end = 2 * p;
      if (first_[x] < 0) {
        first_[x] = p;
        ends_[x][0] = in_end;
        ends_[x][1] = out_end;
      } else {
        ends_[x][2] = in_end;
        ends_[x][3] = out_end;
      }
      end_crossing_[in_end] = end_crossing_[out_end] = x;
    }
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) { return first_[a] < first_[b]; });
    flip_.assign(static_cast<std::size_t>(n_), -1);
  }

  std::optional<std::vector<int>> run() {
    if (n_ == 0) return std::vector<int>{};
    flip_[order_[0]] = 1;
    if (dfs(1)) return flip_;
    return std::nullopt;
  }

  std::array<int, 4> rotation(int x, int flip) const {
    const auto& e = ends_[x];
    return flip == 0 ? std::array<int, 4>{e[0], e[2], e[1], e[3]} : std::array<int, 4>{e[0], e[3], e[1], e[2]};
  }

  const std::array<int, 4>& ends(int x) const { return ends_[x]; }
  int first_pass(int x) const { return first_[x]; }

 private:
  bool dfs(std::size_t depth) {
    if (partial_genus() > 0) return false;
    if (depth == order_.size()) return true;
    int x = order_[depth];
    for (int f = 0; f < 2; ++f) {
      flip_[x] = f;
      if (dfs(depth + 1)) return true;
    }
    flip_[x] = -1;
    return false;
  }

  // Twice the genus of the embedded subgraph spanned by assigned crossings.
  int partial_genus() const {
    const int total = 4 * n_;
    auto assigned = [&](int h) { return flip_[end_crossing_[h]] >= 0; };
    auto present = [&](int h) { return assigned(h) && assigned(h ^ 1); };
    std::vector<int> next(static_cast<std::size_t>(total), -1);
    int vertices = 0, isolated = 0, half_edges = 0;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int x = 0; x < n_; ++x) {
      if (flip_[x] < 0) continue;
      ++vertices;
      std::vector<int> live;
      for (int h : rotation(x, flip_[x]))
        if (present(h)) live.push_back(h);
      if (live.empty()) ++isolated;
      for (std::size_t k = 0; k < live.size(); ++k) next[live[k]] = live[(k + 1) % live.size()];
      half_edges += static_cast<int>(live.size());
      for (int h : live) parent[find(x)] = find(end_crossing_[h ^ 1]);
    }
    int components = 0;
    for (int x = 0; x < n_; ++x) components += flip_[x] >= 0 && find(x) == x;
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    int faces = isolated;
    for (int h = 0; h < total; ++h) {
      if (next[h] < 0 || seen[h]) continue;
      ++faces;
      for (int t = h; !seen[t]; t = next[t ^ 1]) seen[t] = 1;
    }
    return 2 * components - vertices + half_edges / 2 - faces;
  }

  const std::vector<Passage>& seq_;
  int n_ = 0;
  std::vector<std::array<int, 4>> ends_;
  std::vector<int> first_;
  std::vector<int> end_crossing_;
  std::vector<int> order_;
  std::vector<int> flip_;
};

}  // namespace

Diagram realize_knot(const std::vector<Passage>& seq) {
  if (seq.empty()) return Diagram();
  if (seq.size() % 2 != 0) throw ParseError("a knot code visits every crossing twice");
  const int n = static_cast<int>(seq.size()) / 2;
  std::vector<int> seen(static_cast<std::size_t>(n), 0), overs(static_cast<std::size_t>(n), 0);
  for (const Passage& p : seq) {
    if (p.crossing < 0 || p.crossing >= n) throw ParseError("crossing index out of range");
    ++seen[p.crossing];
    overs[p.crossing] += p.over;
  }
  for (int x = 0; x < n; ++x) {
    if (seen[x] != 2) throw ParseError("crossing " + std::to_string(x + 1) + " is not visited exactly twice");
    if (overs[x] != 1) throw ParseError("crossing " + std::to_string(x + 1) + " needs one over and one under pass");
  }

  EmbeddingSearch search(seq);
  auto flips = search.run();
  if (!flips) throw ParseError("code is not realizable by a planar diagram");

  std::vector<int> slot_of(static_cast<std::size_t>(4 * n), -1);
  std::vector<int> link(static_cast<std::size_t>(4 * n)), dir(static_cast<std::size_t>(4 * n));
  for (int x = 0; x < n; ++x) {
    auto rot = search.rotation(x, (*flips)[x]);
    const auto& e = search.ends(x);
    int under_in = seq[search.first_pass(x)].over ? e[2] : e[0];
    auto at = std::find(rot.begin(), rot.end(), under_in);
    std::rotate(rot.begin(), at, rot.end());
    for (int k = 0; k < 4; ++k) slot_of[rot[k]] = 4 * x + k;
    dir[slot_of[e[0]]] = dir[slot_of[e[2]]] = 1;
    dir[slot_of[e[1]]] = dir[slot_of[e[3]]] = -1;
  }
  for (int h = 0; h < 4 * n; ++h) link[slot_of[h]] = slot_of[h ^ 1];
  return Diagram::from_slots(std::move(link), std::move(dir), 0, true);
}

Diagram parse_pd(std::string_view text) {
  std::string_view v = trim(text);
  if (consume(v, "PD[")) {
    if (v.empty() || v.back() != ']') throw ParseError("unterminated PD[...] wrapper");
    v.remove_suffix(1);
  }
  std::vector<std::array<int, 4>> pd;
  auto skip = [&v] {
    while (!v.empty() && (v.front() == ',' || std::isspace(static_cast<unsigned char>(v.front())))) v.remove_prefix(1);
  };
  for (skip(); !v.empty(); skip()) {
    if (!consume(v, "X[")) throw ParseError("expected X[a,b,c,d] at '" + std::string(v.substr(0, 16)) + "'");
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) {
      v = trim(v);
      auto value = read_int(v);
      if (!value) throw ParseError("expected an integer edge label in PD code");
      x[k] = *value;
      v = trim(v);
      if (!consume(v, k < 3 ? "," : "]")) throw ParseError("malformed PD crossing");
    }
    pd.push_back(x);
  }
  return Diagram::from_pd(pd);
}

Diagram parse_dt(std::string_view text) {
  std::vector<int> code;
  for (auto tok : tokens(text)) code.push_back(parse_whole_int(tok, "DT"));
  const int n = static_cast<int>(code.size());
  std::vector<Passage> seq(static_cast<std::size_t>(2 * n), Passage{-1, false});
  for (int j = 0; j < n; ++j) {
    int even = std::abs(code[j]);
    if (even % 2 != 0 || even < 2 || even > 2 * n) {
      throw ParseError("DT entry " + std::to_string(code[j]) + " is not an even label in 2.." + std::to_string(2 * n));
    }
    if (seq[even - 1].crossing >= 0) throw ParseError("DT label " + std::to_string(even) + " repeated");
    bool odd_over = code[j] > 0;
    seq[2 * j] = {j, odd_over};
    seq[even - 1] = {j, !odd_over};
  }
  return realize_knot(seq);
}

Diagram parse_gauss(std::string_view text) {
  std::map<int, int> index;
  std::vector<Passage> seq;
  for (auto tok : tokens(text)) {
    int v = parse_whole_int(tok, "Gauss");
    if (v == 0) throw ParseError("Gauss code entries must be nonzero");
    auto [it, inserted] = index.try_emplace(std::abs(v), static_cast<int>(index.size()));
    seq.push_back({it->second, v > 0});
  }
  return realize_knot(seq);
}

namespace {

// One braid letter: 3, -3, s3, σ3, σ3^-1, σ3⁻¹, s3^-1.
int parse_braid_letter(std::string_view tok) {
  std::string_view v = tok;
  if (!consume(v, "σ")) consume(v, "s");
  bool negative = consume(v, "-");
  auto idx = read_int(v);
  if (!idx || *idx <= 0) {
    throw ParseError("malformed braid letter '" + std::string(tok) + "'");
  }
  if (consume(v, "^-1") || consume(v, "⁻¹")) negative = !negative;
  if (!v.empty()) throw ParseError("malformed braid letter '" + std::string(tok) + "'");
  return negative ? -*idx : *idx;
}

}  // namespace

Diagram parse_braid(std::string_view text) {
  std::vector<int> word;
  for (auto tok : tokens(text)) word.push_back(parse_braid_letter(tok));
  int strands = 1;
  for (int g : word) strands = std::max(strands, std::abs(g) + 1);

  // Strands run upward. A crossing's ends are BL, BR (incoming) and TL, TR
  // (outgoing); listed clockwise from the under-strand's incoming end they are
  // BR BL TL TR for sigma_i and BL TL TR BR for its inverse.
  const int c = static_cast<int>(word.size());
  std::vector<int> link(static_cast<std::size_t>(4 * c), -1), dir(static_cast<std::size_t>(4 * c), 0);
  std::vector<int> bottom(static_cast<std::size_t>(strands), -1), top(static_cast<std::size_t>(strands), -1);
  auto join = [&](int a, int b) {
    link[a] = b;
    link[b] = a;
  };
  for (int x = 0; x < c; ++x) {
    int left = std::abs(word[x]) - 1, right = left + 1;
    int bl, br, tl, tr;
    if (word[x] > 0) {
      br = 4 * x, bl = 4 * x + 1, tl = 4 * x + 2, tr = 4 * x + 3;
    } else {
      bl = 4 * x, tl = 4 * x + 1, tr = 4 * x + 2, br = 4 * x + 3;
    }
    dir[bl] = dir[br] = 1;
    dir[tl] = dir[tr] = -1;
    for (auto [pos, in] : {std::pair{left, bl}, std::pair{right, br}}) {
      if (top[pos] < 0)
        bottom[pos] = in;
      else
        join(top[pos], in);
    }
    top[left] = tl;
    top[right] = tr;
  }
  int free_loops = 0;
  for (int p = 0; p < strands; ++p) {
    if (top[p] < 0)
      ++free_loops;
    else
      join(top[p], bottom[p]);
  }
  return Diagram::from_slots(std::move(link), std::move(dir), free_loops, true);
}

Diagram parse_diagram(std::string_view line) {
  std::string_view v = trim(line);
  std::size_t colon = v.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected '<kind>: <code>'");
  std::string_view kind = trim(v.substr(0, colon)), body = v.substr(colon + 1);
  if (kind == "pd") return parse_pd(body);
  if (kind == "dt") return parse_dt(body);
  if (kind == "gauss") return parse_gauss(body);
  if (kind == "braid") return parse_braid(body);
  throw ParseError("unknown diagram kind '" + std::string(kind) + "'");
}

}  // namespace skein

// Copyright 2026 The clawlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clawlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace clawlab {

Graph::Graph(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("graph order must be in [1, 64], got " +
                                std::to_string(n));
  }
  rows_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw std::out_of_range("vertex index out of range");
  }
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (VertexSet r : rows_) twice += set_size(r);
  return twice / 2;
}

int Graph::edges_within(VertexSet s) const noexcept {
  int twice = 0;
  for (VertexSet t = s; t != 0; t &= t - 1) {
    twice += set_size(rows_[std::countr_zero(t)] & s);
  }
  return twice / 2;
}

int Graph::non_edges_within(VertexSet s) const noexcept {
  const int k = set_size(s);
  return k * (k - 1) / 2 - edges_within(s);
}

void Graph::add_edge(int u, int v) { set_edge(u, v, true); }
void Graph::remove_edge(int u, int v) { set_edge(u, v, false); }

void Graph::set_edge(int u, int v, bool present) {
  check_pair(u, v);
  if (present) {
    rows_[u] |= vertex_bit(v);
    rows_[v] |= vertex_bit(u);
  } else {
    rows_[u] &= ~vertex_bit(v);
    rows_[v] &= ~vertex_bit(u);
  }
}

Graph Graph::complement() const {
  Graph c(order());
  const VertexSet all = vertices();
  for (int v = 0; v < order(); ++v) c.rows_[v] = all & ~rows_[v] & ~vertex_bit(v);
  return c;
}

Graph Graph::induced(VertexSet s) const {
  std::vector<int> index(order(), -1);
  int k = 0;
  for (VertexSet t = s; t != 0; t &= t - 1) index[std::countr_zero(t)] = k++;
  Graph h(k);
  for (auto [u, v] : edges()) {
    if (index[u] >= 0 && index[v] >= 0) h.add_edge(index[u], index[v]);
  }
  return h;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for (VertexSet t = rows_[u] & ~first_vertices(u + 1); t != 0; t &= t - 1) {
      out.emplace_back(u, std::countr_zero(t));
    }
  }
  return out;
}

Graph complete_graph(int n) { return empty_graph(n).complement(); }
Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph claw_graph() { return star_graph(3); }

Graph paw_graph() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Graph two_cliques(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a + b; ++u) {
    for (int v = u + 1; v < a + b; ++v) {
      if ((u < a) == (v < a)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw std::invalid_argument("permutation size does not match graph order");
  }
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

bool Bipartition::almost_equitable(int n) const {
  return imbalance() <= std::sqrt(std::log(static_cast<double>(n)));
}

std::vector<int> Division::assignment(int n) const {
  std::vector<int> labels(n, 2);
  for (int v = 0; v < n; ++v) {
    if ((cb.a >> v) & 1U) labels[v] = 0;
    if ((cb.b >> v) & 1U) labels[v] = 1;
  }
  return labels;
}

Division Division::from_assignment(const std::vector<int>& labels) {
  Division d;
  for (int v = 0; v < static_cast<int>(labels.size()); ++v) {
    switch (labels[v]) {
      case 0: d.cb.a |= vertex_bit(v); break;
      case 1: d.cb.b |= vertex_bit(v); break;
      case 2: d.sparse |= vertex_bit(v); break;
      default: throw std::invalid_argument("division labels must be 0, 1 or 2");
    }
  }
  return d;
}

namespace {

// True when some three vertices of s are pairwise non-adjacent.
bool has_independent_triple(const Graph& g, VertexSet s) {
  for (VertexSet t = s; t != 0; t &= t - 1) {
    const int a = std::countr_zero(t);
    VertexSet rest = s & ~g.neighbors(a) & ~first_vertices(a + 1);
    for (; rest != 0; rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      if ((rest & ~g.neighbors(b) & ~first_vertices(b + 1)) != 0) return true;
    }
  }
  return false;
}

std::uint64_t independent_triples(const Graph& g, VertexSet s) {
  std::uint64_t count = 0;
  for (VertexSet t = s; t != 0; t &= t - 1) {
    const int a = std::countr_zero(t);
    VertexSet rest = s & ~g.neighbors(a) & ~first_vertices(a + 1);
    for (; rest != 0; rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      count += set_size(rest & ~g.neighbors(b) & ~first_vertices(b + 1));
    }
  }
  return count;
}

bool is_claw_pattern(const Graph& f) {
  if (f.order() != 4 || f.edge_count() != 3) return false;
  for (int v = 0; v < 4; ++v) {
    if (f.degree(v) == 3) return true;
  }
  return false;
}

std::uint64_t count_injective_induced(const Graph& f, const Graph& g) {
  const int k = f.order();
  std::vector<int> image(k, -1);
  std::uint64_t count = 0;
  std::function<void(int, VertexSet)> extend = [&](int i, VertexSet used) {
    if (i == k) {
      ++count;
      return;
    }
    for (VertexSet cand = g.vertices() & ~used; cand != 0; cand &= cand - 1) {
      const int x = std::countr_zero(cand);
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        ok = f.adjacent(i, j) == g.adjacent(x, image[j]);
      }
      if (!ok) continue;
      image[i] = x;
      extend(i + 1, used | vertex_bit(x));
    }
  };
  extend(0, 0);
  return count;
}

}  // namespace

bool has_induced_claw(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3 && has_independent_triple(g, g.neighbors(v))) return true;
  }
  return false;
}

InducedCopies count_induced_copies(const Graph& f, const Graph& g) {
  if (f.order() > g.order()) return {0, 0, 0};
  InducedCopies out;
  if (is_claw_pattern(f)) {
    std::uint64_t triples = 0;
    for (int v = 0; v < g.order(); ++v) triples += independent_triples(g, g.neighbors(v));
    out.injective = 6 * triples;
    out.automorphisms = 6;
  } else {
    if (g.order() > kMaxGenericCopiesOrder) {
      throw std::out_of_range("generic induced copy counting needs v(G) <= 20");
    }
    out.injective = count_injective_induced(f, g);
    out.automorphisms = count_injective_induced(f, f);
  }
  out.unordered = out.injective / out.automorphisms;
  return out;
}

namespace {

// 2-colors every component starting from its least vertex (color 0).
// Returns false on an odd cycle. components receives the component count.
bool two_color(const Graph& g, VertexSet& color0, VertexSet& color1, int& components) {
  color0 = color1 = 0;
  components = 0;
  VertexSet unseen = g.vertices();
  while (unseen != 0) {
    const int root = std::countr_zero(unseen);
    ++components;
    VertexSet frontier = vertex_bit(root);
    VertexSet side[2] = {vertex_bit(root), 0};
    unseen &= ~frontier;
    int parity = 0;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet t = frontier; t != 0; t &= t - 1) next |= g.neighbors(std::countr_zero(t));
      if ((next & side[parity]) != 0) return false;
      next &= unseen;
      parity ^= 1;
      side[parity] |= next;
      unseen &= ~next;
      frontier = next;
    }
    // An edge joining two vertices at the same BFS depth is an odd cycle; the
    // check above catches it when the deeper layer is expanded.
    for (int s = 0; s < 2; ++s) {
      for (VertexSet t = side[s]; t != 0; t &= t - 1) {
        if ((g.neighbors(std::countr_zero(t)) & side[s]) != 0) return false;
      }
    }
    color0 |= side[0];
    color1 |= side[1];
  }
  return true;
}

}  // namespace

bool is_bipartite(const Graph& g) {
  VertexSet a, b;
  int c;
  return two_color(g, a, b, c);
}

std::optional<Bipartition> is_cobipartite(const Graph& g) {
  VertexSet a, b;
  int components;
  if (!two_color(g.complement(), a, b, components)) return std::nullopt;
  if (b == 0 && g.order() > 1) {
    const VertexSet last = vertex_bit(g.order() - 1);
    a &= ~last;
    b |= last;
  }
  return Bipartition{a, b};
}

std::uint64_t two_clique_cover_count(const Graph& g) {
  VertexSet a, b;
  int components;
  if (!two_color(g.complement(), a, b, components)) return 0;
  std::uint64_t count = std::uint64_t{1} << (components - 1);
  if (g.edge_count() == g.order() * (g.order() - 1) / 2) --count;
  return count;
}

bool has_unique_cover(const Graph& g) { return two_clique_cover_count(g) == 1; }

bool has_universal_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return true;
  }
  return false;
}

int maximum_matching_size(const Graph& g) {
  if (g.order() > kMaxMatchingOrder) {
    throw std::out_of_range("exact matching search needs n <= 24");
  }
  int best = 0;
  std::function<void(VertexSet, int)> search = [&](VertexSet free, int size) {
    // Drop vertices that can no longer be matched.
    VertexSet live = 0;
    for (VertexSet t = free; t != 0; t &= t - 1) {
      const int v = std::countr_zero(t);
      if ((g.neighbors(v) & free) != 0) live |= vertex_bit(v);
    }
    best = std::max(best, size);
    if (size + set_size(live) / 2 <= best) return;
    const int v = std::countr_zero(live);
    for (VertexSet t = g.neighbors(v) & live; t != 0; t &= t - 1) {
      search(live & ~vertex_bit(v) & ~vertex_bit(std::countr_zero(t)), size + 1);
    }
    search(live & ~vertex_bit(v), size);
  };
  search(g.vertices(), 0);
  return best;
}

int matching_lower_bound(int n, int m) {
  const double bound = std::min(std::sqrt(2.0) / 4.0 * std::sqrt(static_cast<double>(m)),
                                static_cast<double>(m) / n);
  return static_cast<int>(std::floor(bound));
}

int defect(const Graph& g, const Division& division) {
  const VertexSet core = division.cb.a | division.cb.b;
  return g.non_edges_within(division.cb.a) + g.non_edges_within(division.cb.b) +
         (g.edge_count() - g.edges_within(core & ~division.sparse));
}

namespace {

DivisionResult exact_division(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> labels(n), best_labels;
  VertexSet parts[3] = {0, 0, 0};
  // Costs only look backwards: a C vertex pays for every earlier neighbor,
  // an A or B vertex pays for earlier non-neighbors in its part and for
  // earlier C neighbors. B opens only after A to skip mirrored labelings.
  std::function<void(int, int)> assign_full = [&](int v, int cost) {
    if (cost >= best) return;
    if (v == n) {
      if (parts[0] == 0 || parts[1] == 0) return;
      best = cost;
      best_labels = labels;
      return;
    }
    const VertexSet placed = parts[0] | parts[1] | parts[2];
    const VertexSet nbrs = g.neighbors(v);
    const int to_sparse = set_size(nbrs & parts[2]);
    const int delta[3] = {
        set_size(parts[0] & ~nbrs) + to_sparse,
        set_size(parts[1] & ~nbrs) + to_sparse,
        set_size(placed & nbrs),
    };
    for (int label = 0; label < 3; ++label) {
      if (label == 1 && parts[0] == 0) continue;
      labels[v] = label;
      parts[label] |= vertex_bit(v);
      assign_full(v + 1, cost + delta[label]);
      parts[label] &= ~vertex_bit(v);
    }
  };
  assign_full(0, 0);
  Division d = Division::from_assignment(best_labels);
  return {d, best, true};
}

DivisionResult local_search_division(const Graph& g) {
  const int n = g.order();
  auto cost_of = [&](const std::vector<int>& labels) {
    return defect(g, Division::from_assignment(labels));
  };
  auto valid = [](const std::vector<int>& labels) {
    bool has_a = false, has_b = false;
    for (int l : labels) {
      has_a |= l == 0;
      has_b |= l == 1;
    }
    return has_a && has_b;
  };
  auto improve = [&](std::vector<int> labels) {
    int cost = cost_of(labels);
    for (bool moved = true; moved;) {
      moved = false;
      for (int v = 0; v < n; ++v) {
        const int original = labels[v];
        int best_label = original, best_cost = cost;
        for (int label = 0; label < 3; ++label) {
          if (label == original) continue;
          labels[v] = label;
          if (valid(labels)) {
            const int c = cost_of(labels);
            if (c < best_cost) {
              best_cost = c;
              best_label = label;
            }
          }
        }
        labels[v] = best_label;
        if (best_label != original) {
          cost = best_cost;
          moved = true;
        }
      }
    }
    return std::make_pair(cost, labels);
  };

  std::vector<std::vector<int>> starts;
  if (auto cover = is_cobipartite(g); cover && !cover->degenerate()) {
    starts.push_back(Division{*cover, 0}.assignment(n));
  }
  {
    // Largest-degree vertex and its best non-neighbor seed A and B.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return g.degree(x) > g.degree(y); });
    std::vector<int> labels(n, 2);
    labels[order[0]] = 0;
    labels[order.size() > 1 ? order[1] : order[0]] = 1;
    if (n >= 2) starts.push_back(labels);
    // Greedy two-clique growth from the complement 2-coloring.
    std::vector<int> greedy(n, 2);
    VertexSet a = 0, b = 0;
    for (int v : order) {
      if ((g.neighbors(v) & a) == a) {
        a |= vertex_bit(v);
        greedy[v] = 0;
      } else if ((g.neighbors(v) & b) == b) {
        b |= vertex_bit(v);
        greedy[v] = 1;
      }
    }
    if (a != 0 && b != 0) starts.push_back(greedy);
  }
  if (starts.empty()) {
    std::vector<int> labels(n, 2);
    labels[0] = 0;
    labels[1] = 1;
    starts.push_back(labels);
  }
  std::pair<int, std::vector<int>> best{std::numeric_limits<int>::max(), {}};
  for (auto& s : starts) {
    auto r = improve(s);
    if (r.first < best.first || (r.first == best.first && r.second < best.second)) {
      best = r;
    }
  }
  return {Division::from_assignment(best.second), best.first, false};
}

}  // namespace

DivisionResult optimal_division(const Graph& g, DivisionSearch search) {
  if (g.order() < 2) throw std::invalid_argument("a division needs at least 2 vertices");
  if (search == DivisionSearch::kExact) {
    if (g.order() > kMaxExactDivisionOrder) {
      throw std::out_of_range(
          "exact division search needs n <= 14; use the heuristic search for larger graphs");
    }
    return exact_division(g);
  }
  return local_search_division(g);
}

}  // namespace clawlab

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

#ifndef CLAWLAB_GRAPH_HPP_
#define CLAWLAB_GRAPH_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace clawlab {

using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(int v) noexcept { return VertexSet{1} << v; }
constexpr VertexSet first_vertices(int n) noexcept {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
constexpr int set_size(VertexSet s) noexcept { return std::popcount(s); }

/// Labeled simple graph on at most 64 vertices. Row v holds the neighbor set
/// of v as a bitmask; rows stay symmetric with clear diagonal bits.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  /// Edgeless graph on n vertices; throws std::invalid_argument unless
  /// 1 <= n <= 64.
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  VertexSet vertices() const noexcept { return first_vertices(order()); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return set_size(rows_[v]); }
  int edge_count() const noexcept;
  /// Number of edges with both ends in s.
  int edges_within(VertexSet s) const noexcept;
  /// Number of non-adjacent pairs inside s.
  int non_edges_within(VertexSet s) const noexcept;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void set_edge(int u, int v, bool present);

  Graph complement() const;
  Graph induced(VertexSet s) const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const;
  std::vector<VertexSet> rows_;
};

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph claw_graph();
/// Triangle {0,1,2} with pendant vertex 3 attached to 0.
Graph paw_graph();
Graph petersen_graph();
/// Two disjoint cliques of the given sizes.
Graph two_cliques(int a, int b);
/// Applies a vertex relabeling: result has edge {perm[u], perm[v]} for every
/// edge {u, v}.
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Unordered pair of disjoint vertex sets covering V.
struct Bipartition {
  VertexSet a = 0;
  VertexSet b = 0;

  bool degenerate() const noexcept { return a == 0 || b == 0; }
  int imbalance() const noexcept {
    const int d = set_size(a) - set_size(b);
    return d < 0 ? -d : d;
  }
  /// Imbalance at most sqrt(ln n).
  bool almost_equitable(int n) const;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// {{A, B}, C}: co-bipartite part {A, B} and sparse part C.
struct Division {
  Bipartition cb;
  VertexSet sparse = 0;

  /// Per-vertex labels, 0 for A, 1 for B, 2 for C.
  std::vector<int> assignment(int n) const;
  static Division from_assignment(const std::vector<int>& labels);
  friend bool operator==(const Division&, const Division&) = default;
};

bool has_induced_claw(const Graph& g);

struct InducedCopies {
  std::uint64_t injective = 0;  // injective maps preserving edges and non-edges
  std::uint64_t automorphisms = 0;
  std::uint64_t unordered = 0;  // injective / automorphisms
};

/// Counts induced copies of f in g. The generic path needs
/// v(f) <= v(g) <= 20; a claw pattern uses a neighborhood scan on any g.
InducedCopies count_induced_copies(const Graph& f, const Graph& g);

bool is_bipartite(const Graph& g);

/// Witness 2-clique-cover when the complement of g is bipartite. Complement
/// components are 2-colored from their least vertex, which goes to A. If that
/// leaves B empty (g complete) the largest vertex moves to B; for n = 1 the
/// result is degenerate.
std::optional<Bipartition> is_cobipartite(const Graph& g);

/// Unordered covers {A, B} with both parts nonempty cliques.
std::uint64_t two_clique_cover_count(const Graph& g);
bool has_unique_cover(const Graph& g);

bool has_universal_vertex(const Graph& g);

/// Exact maximum matching size by branch and bound; n <= 24.
int maximum_matching_size(const Graph& g);
/// floor(min{sqrt(2)/4 * sqrt(m), m/n}).
int matching_lower_bound(int n, int m);

/// b(G, Pi) = e(G^c[A]) + e(G^c[B]) + #edges with an endpoint in C.
int defect(const Graph& g, const Division& division);

enum class DivisionSearch { kExact, kHeuristic };

struct DivisionResult {
  Division division;
  int defect = 0;
  bool exact = true;
};

/// Minimizes b(G, .) over divisions. Exact search (n <= 14) returns the
/// lexicographically least minimizing assignment; the heuristic is a
/// deterministic local search whose value is an upper bound.
DivisionResult optimal_division(const Graph& g,
                                DivisionSearch search = DivisionSearch::kExact);

inline constexpr int kMaxExactDivisionOrder = 14;
inline constexpr int kMaxMatchingOrder = 24;
inline constexpr int kMaxGenericCopiesOrder = 20;

}  // namespace clawlab

#endif  // CLAWLAB_GRAPH_HPP_

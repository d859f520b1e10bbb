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

#include <cmath>
#include <vector>

#include "clawlab/graph.hpp"
#include "clawlab/graph_io.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace clawlab;
using clawlab::test::graph_from_mask;
using clawlab::test::is_clique;

namespace {

std::uint64_t brute_cover_count(const Graph& g) {
  const int n = g.order();
  std::uint64_t count = 0;
  // Vertex n-1 always sits in B, so each unordered cover is seen once.
  for (VertexSet a = 0; a < (VertexSet{1} << (n - 1)); ++a) {
    const VertexSet b = g.vertices() & ~a;
    if (a != 0 && is_clique(g, a) && is_clique(g, b)) ++count;
  }
  return count;
}

int brute_division(const Graph& g) {
  const int n = g.order();
  int best = 1 << 30;
  std::vector<int> labels(n, 0);
  for (;;) {
    const Division d = Division::from_assignment(labels);
    if (d.cb.a != 0 && d.cb.b != 0) best = std::min(best, defect(g, d));
    int i = 0;
    while (i < n && labels[i] == 2) labels[i++] = 0;
    if (i == n) break;
    ++labels[i];
  }
  return best;
}

int brute_matching(const Graph& g) {
  const auto edges = g.edges();
  int best = 0;
  std::function<void(std::size_t, VertexSet, int)> rec = [&](std::size_t i, VertexSet used, int size) {
    best = std::max(best, size);
    for (std::size_t k = i; k < edges.size(); ++k) {
      const auto [u, v] = edges[k];
      if (((used >> u) & 1U) || ((used >> v) & 1U)) continue;
      rec(k + 1, used | vertex_bit(u) | vertex_bit(v), size + 1);
    }
  };
  rec(0, 0, 0);
  return best;
}

int reference_matching_bound(int n, int m) {
  return static_cast<int>(std::floor(std::min(std::sqrt(2.0) / 4.0 * std::sqrt(static_cast<double>(m)),
                                               static_cast<double>(m) / n)));
}

}  // namespace

TEST_SUITE("graph_core") {

TEST_CASE("claw detection examples") {
  CHECK(has_induced_claw(claw_graph()));
  CHECK_FALSE(has_induced_claw(complete_graph(4)));
  CHECK_FALSE(has_induced_claw(paw_graph()));
  CHECK(has_induced_claw(petersen_graph()));
  CHECK_FALSE(has_induced_claw(cycle_graph(7)));
}

TEST_CASE("induced copy counts") {
  const auto cc = count_induced_copies(claw_graph(), claw_graph());
  CHECK(cc.injective == 6);
  CHECK(cc.automorphisms == 6);
  CHECK(cc.unordered == 1);
  CHECK(count_induced_copies(complete_graph(2), complete_graph(3)).injective == 6);
  CHECK(count_induced_copies(claw_graph(), complete_graph(4)).injective == 0);
  CHECK(count_induced_copies(path_graph(3), cycle_graph(5)).unordered == 5);
  CHECK(count_induced_copies(claw_graph(), star_graph(5)).unordered == 10);
}

TEST_CASE("claw detection agrees with induced copy counting on random graphs") {
  const CounterRng rng(11, 1);
  std::uint64_t counter = 0;
  const Graph claw = claw_graph();
  const Graph claw_generic = relabel(claw_graph(), {1, 0, 2, 3});
  int disagreements = 0;
  for (int t = 0; t < 100000; ++t) {
    const int n = 4 + static_cast<int>(rng.below(13, counter));
    const double p = rng.uniform(counter++);
    const Graph g = clawlab::test::random_graph(n, p, rng, counter);
    disagreements += has_induced_claw(g) != (count_induced_copies(claw, g).injective > 0);
    if (t < 2000 && n <= 10) {
      CHECK(count_induced_copies(claw_generic, g).injective == count_induced_copies(claw, g).injective);
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("co-bipartite recognition examples") {
  const auto k5 = is_cobipartite(complete_graph(5));
  REQUIRE(k5.has_value());
  CHECK((k5->a | k5->b) == complete_graph(5).vertices());
  CHECK_FALSE(is_cobipartite(cycle_graph(5)).has_value());
  Graph disjoint(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto cover = is_cobipartite(disjoint);
  REQUIRE(cover.has_value());
  CHECK(((cover->a == 0b000111 && cover->b == 0b111000) || (cover->a == 0b111000 && cover->b == 0b000111)));
}

TEST_CASE("complement duality, exhaustive up to 7 vertices") {
  for (int n = 1; n <= 7; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    std::uint64_t mismatches = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = graph_from_mask(n, mask);
      mismatches += is_cobipartite(g).has_value() != is_bipartite(g.complement());
    }
    CHECK_MESSAGE(mismatches == 0, "n = " << n);
  }
}

TEST_CASE("cover count examples") {
  Graph disjoint(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(two_clique_cover_count(disjoint) == 1);
  CHECK(has_unique_cover(disjoint));
  CHECK(two_clique_cover_count(complete_graph(4)) == 7);
  CHECK(two_clique_cover_count(cycle_graph(5)) == 0);
  CHECK(two_clique_cover_count(complete_graph(1)) == 0);
}

TEST_CASE("cover count formula equals brute force on every co-bipartite graph up to 7 vertices") {
  for (int n = 1; n <= 7; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    std::uint64_t mismatches = 0, checked = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = graph_from_mask(n, mask);
      if (!is_cobipartite(g)) continue;
      ++checked;
      mismatches += two_clique_cover_count(g) != brute_cover_count(g);
    }
    CHECK(checked > 0);
    CHECK_MESSAGE(mismatches == 0, "n = " << n);
  }
}

TEST_CASE("maximum matching examples") {
  CHECK(maximum_matching_size(complete_graph(4)) == 2);
  CHECK(maximum_matching_size(cycle_graph(6)) == 3);
  CHECK(maximum_matching_size(petersen_graph()) == 5);
  CHECK(maximum_matching_size(star_graph(5)) == 1);
  CHECK(maximum_matching_size(empty_graph(3)) == 0);
}

TEST_CASE("matching bound holds exhaustively up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = graph_from_mask(n, mask);
      const int nu = maximum_matching_size(g);
      if (nu < matching_lower_bound(n, g.edge_count())) FAIL("bound violated at n=" << n << " mask=" << mask);
      if (n <= 5 && nu != brute_matching(g)) FAIL("matching mismatch at mask " << mask);
    }
  }
  CHECK(matching_lower_bound(6, 9) == reference_matching_bound(6, 9));
}

TEST_CASE("matching bound on random graphs with 7 and 8 vertices") {
  const CounterRng rng(12, 2);
  std::uint64_t counter = 0;
  int violations = 0;
  for (int t = 0; t < 100000; ++t) {
    const int n = 7 + (t & 1);
    const Graph g = graph_from_mask(n, rng.bits(counter++) & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
    const int bound = reference_matching_bound(n, g.edge_count());
    CHECK(bound == matching_lower_bound(n, g.edge_count()));
    violations += maximum_matching_size(g) < bound;
  }
  CHECK(violations == 0);
}

TEST_CASE("defect examples") {
  Division balanced;
  balanced.cb = {0b000111, 0b111000};
  CHECK(defect(complete_graph(6), balanced) == 0);
  Division singletons;
  singletons.cb = {0b00001, 0b00010};
  singletons.sparse = 0b11100;
  CHECK(defect(empty_graph(5), singletons) == 0);
  const auto c5 = optimal_division(cycle_graph(5));
  CHECK(c5.defect == 1);
  CHECK(c5.exact);
  CHECK(c5.division.assignment(5) == std::vector<int>{0, 0, 0, 1, 1});
  CHECK(brute_division(cycle_graph(5)) == 1);
  CHECK_THROWS_AS(optimal_division(empty_graph(15)), std::out_of_range);
}

TEST_CASE("optimal division is never beaten by a random division") {
  const CounterRng rng(13, 3);
  std::uint64_t counter = 0;
  int failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng.below(9, counter));
    const Graph g = clawlab::test::random_graph(n, rng.uniform(counter++), rng, counter);
    std::vector<int> labels(n);
    for (auto& l : labels) l = static_cast<int>(rng.below(3, counter));
    labels[0] = 0;
    labels[1] = 1;
    const auto best = optimal_division(g);
    failures += best.defect > defect(g, Division::from_assignment(labels));
    failures += best.defect != defect(g, best.division);
    if (t < 150 && n <= 7) CHECK(best.defect == brute_division(g));
  }
  CHECK(failures == 0);
}

TEST_CASE("heuristic division is an upper bound") {
  const CounterRng rng(14, 4);
  std::uint64_t counter = 0;
  for (int t = 0; t < 40; ++t) {
    const Graph g = clawlab::test::random_graph(10, 0.8, rng, counter);
    const auto h = optimal_division(g, DivisionSearch::kHeuristic);
    CHECK_FALSE(h.exact);
    CHECK(h.defect >= optimal_division(g).defect);
    CHECK(h.defect == defect(g, h.division));
  }
  CHECK(optimal_division(two_cliques(10, 10), DivisionSearch::kHeuristic).defect == 0);
}

TEST_CASE("graph6 and JSON round trips") {
  const CounterRng rng(15, 5);
  std::uint64_t counter = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng.below(64, counter)) + 1;
    const Graph g = clawlab::test::random_graph(n, 0.4, rng, counter);
    CHECK(from_graph6(to_graph6(g)) == g);
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(from_graph6(">>graph6<<C~") == complete_graph(4));
  CHECK_THROWS(from_graph6(""));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
}

}  // TEST_SUITE

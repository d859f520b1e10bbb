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

#ifndef CLAWLAB_TESTS_HELPERS_HPP_
#define CLAWLAB_TESTS_HELPERS_HPP_

#include <cstdint>
#include <vector>

#include "clawlab/graph.hpp"
#include "clawlab/random.hpp"

namespace clawlab::test {

/// Bit k of mask selects the k-th pair in lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++k) {
      if ((mask >> k) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph random_graph(int n, double p, const CounterRng& rng, std::uint64_t& counter) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform(counter++) < p) g.add_edge(u, v);
    }
  }
  return g;
}

inline bool is_clique(const Graph& g, VertexSet s) {
  for (int u = 0; u < g.order(); ++u) {
    if (!((s >> u) & 1U)) continue;
    for (int v = u + 1; v < g.order(); ++v) {
      if (((s >> v) & 1U) && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

}  // namespace clawlab::test

#endif  // CLAWLAB_TESTS_HELPERS_HPP_

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

#include "clawlab/enumerate.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "clawlab/cache.hpp"
#include "clawlab/graph.hpp"

namespace clawlab {

std::string to_string(CountMethod method) {
  switch (method) {
    case CountMethod::kAuto: return "auto";
    case CountMethod::kScan: return "scan";
    case CountMethod::kDp: return "dp";
    case CountMethod::kEdgeSubset: return "edge-subset";
  }
  return "unknown";
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

using Clock = std::chrono::steady_clock;
using Histogram = std::vector<std::uint64_t>;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class ProgressReporter {
 public:
  ProgressReporter(const EnumOptions& options, std::size_t total)
      : callback_(options.progress), total_(total) {}
  void tick() {
    if (!callback_) return;
    std::lock_guard<std::mutex> lock(mutex_);
    callback_(++done_, total_);
  }

 private:
  std::function<void(std::size_t, std::size_t)> callback_;
  std::size_t total_;
  std::size_t done_ = 0;
  std::mutex mutex_;
};

void check_order(int n, int cap, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
  if (n > cap) {
    throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) +
                            " exceeds the feasibility cap " + std::to_string(cap));
  }
}

void check_edges(int n, int m) {
  if (m < 0 || m > pair_count(n)) {
    throw std::invalid_argument("edge count m must lie in [0, C(n,2)]");
  }
}

std::vector<BigInt> to_big(const Histogram& h) {
  return std::vector<BigInt>(h.begin(), h.end());
}

// Lexicographic pair list (0,1), (0,2), ..., (n-2,n-1).
std::vector<std::pair<int, int>> lex_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

bool claw_on_four(const std::array<VertexSet, 64>& adj, VertexSet s) {
  int total = 0, top = 0;
  for (VertexSet t = s; t != 0; t &= t - 1) {
    const int d = set_size(adj[std::countr_zero(t)] & s);
    total += d;
    top = std::max(top, d);
  }
  return total == 6 && top == 3;
}

// Gray-code scan of all graphs on n vertices; the first three pair slots are
// fixed per task, the incremental claw count only revisits 4-sets through the
// toggled pair.
Histogram clawfree_scan(int n, const EnumOptions& options) {
  const auto pairs = lex_pairs(n);
  const int total_pairs = static_cast<int>(pairs.size());
  const int fixed = std::min(3, total_pairs);
  const std::size_t tasks = std::size_t{1} << fixed;
  std::vector<Histogram> partial(tasks, Histogram(total_pairs + 1, 0));
  ProgressReporter progress(options, tasks);

  parallel_for_index(tasks, options.threads, options.token, [&](std::size_t task) {
    std::array<VertexSet, 64> adj{};
    int edges = 0;
    for (int b = 0; b < fixed; ++b) {
      if ((task >> b) & 1U) {
        auto [u, v] = pairs[b];
        adj[u] |= vertex_bit(v);
        adj[v] |= vertex_bit(u);
        ++edges;
      }
    }
    std::int64_t claws = 0;
    const VertexSet all = first_vertices(n);
    for (VertexSet s = 0xF; s <= all && n >= 4; ) {
      if (claw_on_four(adj, s)) ++claws;
      // Next 4-subset in colex order (Gosper's hack).
      const VertexSet c = s & (~s + 1);
      const VertexSet r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
    Histogram& hist = partial[task];
    if (claws == 0) ++hist[edges];
    auto delta_through = [&](int u, int v) {
      std::int64_t count = 0;
      const VertexSet others = all & ~vertex_bit(u) & ~vertex_bit(v);
      for (VertexSet t = others; t != 0; t &= t - 1) {
        const int w = std::countr_zero(t);
        for (VertexSet r = t & (t - 1); r != 0; r &= r - 1) {
          const int x = std::countr_zero(r);
          count += claw_on_four(adj, vertex_bit(u) | vertex_bit(v) | vertex_bit(w) |
                                         vertex_bit(x));
        }
      }
      return count;
    };
    const int free_bits = total_pairs - fixed;
    const std::uint64_t steps = std::uint64_t{1} << free_bits;
    for (std::uint64_t t = 1; t < steps; ++t) {
      if ((t & 0xFFFF) == 0 && options.token != nullptr) options.token->throw_if_cancelled();
      auto [u, v] = pairs[fixed + std::countr_zero(t)];
      claws -= delta_through(u, v);
      const bool present = (adj[u] >> v) & 1U;
      adj[u] ^= vertex_bit(v);
      adj[v] ^= vertex_bit(u);
      edges += present ? -1 : 1;
      claws += delta_through(u, v);
      if (claws == 0) ++hist[edges];
    }
    progress.tick();
  });

  Histogram total(total_pairs + 1, 0);
  for (const auto& h : partial) {
    for (int m = 0; m <= total_pairs; ++m) total[m] += h[m];
  }
  return total;
}

// Colex-ordered pairs: all pairs inside {0..j} precede pairs touching j+1.
std::vector<std::pair<int, int>> colex_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) out.emplace_back(i, j);
  }
  return out;
}

bool has_nonadjacent_pair(const std::array<VertexSet, 64>& adj, VertexSet s) {
  for (VertexSet t = s; t != 0; t &= t - 1) {
    const int a = std::countr_zero(t);
    if ((s & ~adj[a] & ~first_vertices(a + 1)) != 0) return true;
  }
  return false;
}

// Claws inside s that use vertex j.
bool claw_using(const std::array<VertexSet, 64>& adj, VertexSet s, int j) {
  const VertexSet nj = adj[j] & s;
  for (VertexSet t = nj; t != 0; t &= t - 1) {
    const int a = std::countr_zero(t);
    const VertexSet rest = nj & ~adj[a] & ~first_vertices(a + 1);
    if (has_nonadjacent_pair(adj, rest)) return true;
    // j as a leaf of center a.
    if (has_nonadjacent_pair(adj, adj[a] & s & ~adj[j] & ~vertex_bit(j))) return true;
  }
  return false;
}

struct EdgeSubsetSearch {
  int n;
  std::optional<int> target;
  std::vector<std::pair<int, int>> pairs;
  std::array<VertexSet, 64> adj{};
  Histogram* hist = nullptr;
  const CancellationToken* token = nullptr;
  std::uint64_t nodes = 0;

  // Decide pair k; returns false if the decision creates a claw.
  bool place(int k, bool present) {
    auto [i, j] = pairs[k];
    if (present) {
      adj[i] |= vertex_bit(j);
      adj[j] |= vertex_bit(i);
    }
    return !claw_using(adj, first_vertices(i + 1) | vertex_bit(j), j);
  }
  void undo(int k) {
    auto [i, j] = pairs[k];
    adj[i] &= ~vertex_bit(j);
    adj[j] &= ~vertex_bit(i);
  }

  void run(int k, int edges) {
    const int total = static_cast<int>(pairs.size());
    if (target) {
      if (edges > *target || edges + (total - k) < *target) return;
    }
    if (k == total) {
      ++(*hist)[edges];
      return;
    }
    if ((++nodes & 0xFFFFF) == 0 && token != nullptr) token->throw_if_cancelled();
    for (int present = 0; present < 2; ++present) {
      if (place(k, present != 0)) run(k + 1, edges + present);
      if (present) undo(k);
    }
  }
};

Histogram clawfree_edge_subset(int n, std::optional<int> m, const EnumOptions& options) {
  const auto pairs = colex_pairs(n);
  const int total_pairs = static_cast<int>(pairs.size());
  const int fixed = std::min(10, total_pairs);
  const std::size_t tasks = std::size_t{1} << fixed;
  std::vector<Histogram> partial(tasks, Histogram(total_pairs + 1, 0));
  ProgressReporter progress(options, tasks);

  parallel_for_index(tasks, options.threads, options.token, [&](std::size_t task) {
    EdgeSubsetSearch search{n, m, pairs};
    search.hist = &partial[task];
    search.token = options.token;
    int edges = 0;
    bool alive = true;
    for (int k = 0; k < fixed && alive; ++k) {
      const bool present = (task >> k) & 1U;
      alive = search.place(k, present);
      edges += present;
    }
    if (alive) search.run(fixed, edges);
    progress.tick();
  });

  Histogram total(total_pairs + 1, 0);
  for (const auto& h : partial) {
    for (int e = 0; e <= total_pairs; ++e) total[e] += h[e];
  }
  return total;
}

double log10_binomial(int n, int k) {
  return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) /
         std::log(10.0);
}

bool edge_subset_feasible(int n, int m) {
  return log10_binomial(pair_count(n), m) <= std::log10(kMaxEdgeSubsetSpace) + 1e-12;
}

// Histogram of graphs satisfying pred, by edge count, over all 2^C(n,2) graphs.
template <typename Pred>
Histogram scan_all_graphs(int n, const EnumOptions& options, Pred pred) {
  const auto pairs = lex_pairs(n);
  const int total_pairs = static_cast<int>(pairs.size());
  const int fixed = std::min(4, total_pairs);
  const std::size_t tasks = std::size_t{1} << fixed;
  std::vector<Histogram> partial(tasks, Histogram(total_pairs + 1, 0));
  parallel_for_index(tasks, options.threads, options.token, [&](std::size_t task) {
    const std::uint64_t rest = std::uint64_t{1} << (total_pairs - fixed);
    for (std::uint64_t low = 0; low < rest; ++low) {
      const std::uint64_t code = (low << fixed) | task;
      Graph g(n);
      for (int b = 0; b < total_pairs; ++b) {
        if ((code >> b) & 1U) g.add_edge(pairs[b].first, pairs[b].second);
      }
      if (pred(g)) ++partial[task][g.edge_count()];
    }
  });
  Histogram total(total_pairs + 1, 0);
  for (const auto& h : partial) {
    for (int e = 0; e <= total_pairs; ++e) total[e] += h[e];
  }
  return total;
}

}  // namespace

CountResult count_clawfree(int n, std::optional<int> m, CountMethod method,
                           const EnumOptions& options) {
  check_order(n, 64, "count_clawfree");
  if (m) check_edges(n, *m);
  const auto start = Clock::now();
  if (method == CountMethod::kAuto) {
    method = (m && edge_subset_feasible(n, *m)) || n > kMaxScanOrder ? CountMethod::kEdgeSubset
                                                                      : CountMethod::kScan;
  }
  Histogram hist;
  switch (method) {
    case CountMethod::kScan:
      check_order(n, kMaxScanOrder, "full claw-free scan");
      hist = clawfree_scan(n, options);
      break;
    case CountMethod::kEdgeSubset:
      if (m) {
        if (!edge_subset_feasible(n, *m)) {
          throw std::out_of_range("edge-subset search needs C(C(n,2), m) <= 1e9; n = " +
                                  std::to_string(n) + ", m = " + std::to_string(*m));
        }
      } else {
        check_order(n, kMaxTableOrder, "claw-free edge-subset search over all m");
      }
      hist = clawfree_edge_subset(n, m, options);
      break;
    default:
      throw std::invalid_argument("claw-free counting supports scan and edge-subset");
  }
  CountResult result;
  result.n = n;
  result.m = m;
  if (m) {
    result.count = hist[*m];
  } else {
    for (auto c : hist) result.count += c;
  }
  result.method = method;
  result.threads = resolve_threads(options.threads);
  result.elapsed_s = seconds_since(start);
  return result;
}

std::vector<BigInt> clawfree_table(int n, const EnumOptions& options) {
  check_order(n, kMaxTableOrder, "claw-free table");
  if (options.use_cache) {
    if (auto cached = load_count_table(cache_directory(), "clawfree", n)) return *cached;
  }
  const CountMethod method = n <= kMaxScanOrder ? CountMethod::kScan : CountMethod::kEdgeSubset;
  const Histogram hist =
      method == CountMethod::kScan ? clawfree_scan(n, options)
                                   : clawfree_edge_subset(n, std::nullopt, options);
  auto table = to_big(hist);
  if (options.use_cache) {
    try {
      save_count_table(cache_directory(), "clawfree", n, to_string(method), table);
    } catch (const std::exception&) {
      // A read-only cache directory only costs recomputation.
    }
  }
  return table;
}

std::vector<BigInt> bipartite_table(int n) {
  check_order(n, kMaxBipartiteOrder, "bipartite DP");
  using Table = std::vector<std::vector<BigInt>>;
  // d[s][k]: 2-colored graphs (ordered color classes) on s vertices.
  Table d(n + 1), cc(n + 1), c(n + 1), b(n + 1);
  for (int s = 0; s <= n; ++s) {
    d[s].assign(pair_count(s) + 1, 0);
    for (int a = 0; a <= s; ++a) {
      const BigInt ways = binomial(s, a);
      const int cross = a * (s - a);
      for (int k = 0; k <= cross; ++k) d[s][k] += ways * binomial(cross, k);
    }
  }
  auto at = [](const std::vector<BigInt>& row, int k) -> BigInt {
    return k >= 0 && k < static_cast<int>(row.size()) ? row[k] : BigInt(0);
  };
  for (int s = 1; s <= n; ++s) {
    const int top = pair_count(s);
    cc[s].assign(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
      BigInt value = d[s][k];
      // Peel off the component containing the first vertex.
      for (int t = 1; t < s; ++t) {
        const BigInt choose = binomial(s - 1, t - 1);
        for (int j = 0; j < static_cast<int>(cc[t].size()); ++j) {
          if (cc[t][j] != 0) value -= choose * cc[t][j] * at(d[s - t], k - j);
        }
      }
      cc[s][k] = value;
    }
    c[s].resize(top + 1);
    for (int k = 0; k <= top; ++k) c[s][k] = cc[s][k] / 2;
  }
  b[0] = {1};
  for (int s = 1; s <= n; ++s) {
    const int top = pair_count(s);
    b[s].assign(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
      BigInt value = 0;
      for (int t = 1; t <= s; ++t) {
        const BigInt choose = binomial(s - 1, t - 1);
        for (int j = 0; j < static_cast<int>(c[t].size()); ++j) {
          if (c[t][j] != 0) value += choose * c[t][j] * at(b[s - t], k - j);
        }
      }
      b[s][k] = value;
    }
  }
  return b[n];
}

std::vector<BigInt> bipartite_table_scan(int n, const EnumOptions& options) {
  check_order(n, 6, "bipartite scan");
  return to_big(scan_all_graphs(n, options, [](const Graph& g) { return is_bipartite(g); }));
}

CountResult count_bipartite_edges(int n, int k, CountMethod method,
                                  const EnumOptions& options) {
  check_order(n, kMaxBipartiteOrder, "count_bipartite_edges");
  check_edges(n, k);
  const auto start = Clock::now();
  if (method == CountMethod::kAuto) method = CountMethod::kDp;
  CountResult result;
  result.n = n;
  result.m = k;
  if (method == CountMethod::kDp) {
    result.count = bipartite_table(n)[k];
  } else if (method == CountMethod::kScan) {
    result.count = bipartite_table_scan(n, options)[k];
  } else {
    throw std::invalid_argument("bipartite counting supports dp and scan");
  }
  result.method = method;
  result.threads = method == CountMethod::kDp ? 1 : resolve_threads(options.threads);
  result.elapsed_s = seconds_since(start);
  return result;
}

std::vector<BigInt> cobipartite_table(int n) {
  auto b = bipartite_table(n);
  return {b.rbegin(), b.rend()};
}

std::vector<BigInt> cobipartite_table_scan(int n, const EnumOptions& options) {
  check_order(n, 6, "co-bipartite scan");
  return to_big(scan_all_graphs(n, options,
                                [](const Graph& g) { return is_cobipartite(g).has_value(); }));
}

CountResult count_cobipartite(int n, int m, CountMethod method, const EnumOptions& options) {
  check_order(n, kMaxBipartiteOrder, "count_cobipartite");
  check_edges(n, m);
  const auto start = Clock::now();
  if (method == CountMethod::kAuto) method = CountMethod::kDp;
  CountResult result;
  result.n = n;
  result.m = m;
  if (method == CountMethod::kDp) {
    result.count = cobipartite_table(n)[m];
  } else if (method == CountMethod::kScan) {
    result.count = cobipartite_table_scan(n, options)[m];
  } else {
    throw std::invalid_argument("co-bipartite counting supports dp and scan");
  }
  result.method = method;
  result.threads = method == CountMethod::kDp ? 1 : resolve_threads(options.threads);
  result.elapsed_s = seconds_since(start);
  return result;
}

ClawfreeProbability exact_clawfree_probability(int n, double p, const EnumOptions& options) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must lie in [0, 1]");
  const auto table = clawfree_table(n, options);
  const int total = pair_count(n);
  long double prob = 0.0L, weighted = 0.0L;
  for (int m = 0; m <= total; ++m) {
    const long double term = table[m].convert_to<long double>() *
                             std::pow(static_cast<long double>(p), m) *
                             std::pow(1.0L - p, total - m);
    prob += term;
    weighted += term * m;
  }
  ClawfreeProbability out;
  out.probability = static_cast<double>(prob);
  out.rate = total == 0 ? 0.0 : static_cast<double>(-std::log2(prob) / total);
  out.conditional_edge_density =
      total == 0 || prob == 0.0L ? 0.0 : static_cast<double>(weighted / (prob * total));
  return out;
}

double fraction_cobipartite(int n, int m, const EnumOptions& options) {
  check_edges(n, m);
  const auto claw_free = clawfree_table(n, options);
  const auto cobip = cobipartite_table(n);
  if (claw_free[m] == 0) {
    throw std::domain_error("no claw-free graphs with these parameters; ratio undefined");
  }
  if (cobip[m] > claw_free[m]) {
    throw std::logic_error("co-bipartite count exceeds claw-free count");
  }
  return cobip[m].convert_to<double>() / claw_free[m].convert_to<double>();
}

namespace {

struct CubicSearch {
  int v;
  bool claw_filter;
  std::array<VertexSet, 64> adj{};
  std::array<int, 64> deg{};
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  const CancellationToken* token = nullptr;

  void link(int a, int b) {
    adj[a] |= vertex_bit(b);
    adj[b] |= vertex_bit(a);
    ++deg[a];
    ++deg[b];
  }
  void unlink(int a, int b) {
    adj[a] &= ~vertex_bit(b);
    adj[b] &= ~vertex_bit(a);
    --deg[a];
    --deg[b];
  }

  // A saturated vertex with an independent neighborhood is a claw center
  // forever once no pair of its neighbors can still gain an edge.
  bool doomed() const {
    for (int x = 0; x < v; ++x) {
      if (deg[x] != 3) continue;
      const VertexSet nb = adj[x];
      bool possible = false;
      for (VertexSet t = nb; t != 0 && !possible; t &= t - 1) {
        const int a = std::countr_zero(t);
        for (VertexSet r = t & (t - 1); r != 0; r &= r - 1) {
          const int b = std::countr_zero(r);
          if (((adj[a] >> b) & 1U) || (deg[a] < 3 && deg[b] < 3)) {
            possible = true;
            break;
          }
        }
      }
      if (!possible) return true;
    }
    return false;
  }

  void run() {
    if ((++nodes & 0xFFFFF) == 0 && token != nullptr) token->throw_if_cancelled();
    int u = 0;
    while (u < v && deg[u] == 3) ++u;
    if (u == v) {
      ++count;
      return;
    }
    const int need = 3 - deg[u];
    VertexSet cand = 0;
    for (int w = u + 1; w < v; ++w) {
      if (deg[w] < 3 && !((adj[u] >> w) & 1U)) cand |= vertex_bit(w);
    }
    if (set_size(cand) < need) return;
    choose(u, cand, need);
  }

  void choose(int u, VertexSet cand, int need) {
    if (need == 0) {
      if (!claw_filter || !doomed()) run();
      return;
    }
    for (VertexSet t = cand; t != 0; t &= t - 1) {
      const int w = std::countr_zero(t);
      if (set_size(t) < need) return;
      link(u, w);
      choose(u, t & (t - 1), need - 1);
      unlink(u, w);
    }
  }
};

std::uint64_t cubic_search(int v, bool claw_filter, const EnumOptions& options) {
  if (v < 1 || v % 2 != 0) throw std::invalid_argument("cubic graphs need an even order");
  if (v > kMaxCubicOrder) {
    throw std::out_of_range("cubic enumeration is capped at v <= 12");
  }
  if (v < 4) return 0;
  // Tasks: the neighbor triple of vertex 0.
  std::vector<VertexSet> firsts;
  for (int a = 1; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      for (int c = b + 1; c < v; ++c) {
        firsts.push_back(vertex_bit(a) | vertex_bit(b) | vertex_bit(c));
      }
    }
  }
  std::vector<std::uint64_t> counts(firsts.size(), 0);
  ProgressReporter progress(options, firsts.size());
  parallel_for_index(firsts.size(), options.threads, options.token, [&](std::size_t i) {
    CubicSearch search{v, claw_filter};
    search.token = options.token;
    for (VertexSet t = firsts[i]; t != 0; t &= t - 1) search.link(0, std::countr_zero(t));
    if (!claw_filter || !search.doomed()) search.run();
    counts[i] = search.count;
    progress.tick();
  });
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace

CountResult count_cubic_clawfree(int v, const EnumOptions& options) {
  const auto start = Clock::now();
  CountResult result;
  result.n = v;
  result.count = cubic_search(v, true, options);
  result.method = CountMethod::kScan;
  result.threads = resolve_threads(options.threads);
  result.elapsed_s = seconds_since(start);
  return result;
}

BigInt count_cubic(int v) { return cubic_search(v, false, {}); }

}  // namespace clawlab

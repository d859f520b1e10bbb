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

#ifndef CLAWLAB_ENUMERATE_HPP_
#define CLAWLAB_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "clawlab/parallel.hpp"

namespace clawlab {

using BigInt = boost::multiprecision::cpp_int;

enum class CountMethod { kAuto, kScan, kDp, kEdgeSubset };

std::string to_string(CountMethod method);

struct EnumOptions {
  int threads = 0;  // 0 = hardware concurrency
  const CancellationToken* token = nullptr;
  // Called with (finished tasks, total tasks); invocations are serialized.
  std::function<void(std::size_t, std::size_t)> progress;
  // Consult and fill the on-disk table cache (see cache.hpp).
  bool use_cache = false;
};

struct CountResult {
  int n = 0;
  std::optional<int> m;
  BigInt count = 0;
  double elapsed_s = 0.0;
  CountMethod method = CountMethod::kScan;
  int threads = 1;
};

inline constexpr int kMaxScanOrder = 7;
inline constexpr int kMaxTableOrder = 8;
inline constexpr int kMaxBipartiteOrder = 14;
inline constexpr int kMaxCubicOrder = 12;
inline constexpr double kMaxEdgeSubsetSpace = 1e9;

constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

/// Exact binomial coefficient.
BigInt binomial(int n, int k);

/// Claw-free graph count on n labeled vertices, optionally restricted to m
/// edges. Throws std::out_of_range when no method is feasible.
CountResult count_clawfree(int n, std::optional<int> m = std::nullopt,
                           CountMethod method = CountMethod::kAuto,
                           const EnumOptions& options = {});

/// |C(n, m)| for m = 0..C(n, 2); n <= 8.
std::vector<BigInt> clawfree_table(int n, const EnumOptions& options = {});

/// |B(n, k)| for k = 0..C(n, 2) by the component deconvolution; n <= 14.
std::vector<BigInt> bipartite_table(int n);
/// Same table by testing every graph; n <= 6.
std::vector<BigInt> bipartite_table_scan(int n, const EnumOptions& options = {});

CountResult count_bipartite_edges(int n, int k,
                                  CountMethod method = CountMethod::kAuto,
                                  const EnumOptions& options = {});

/// |B_c(n, m)| for m = 0..C(n, 2) through complement duality.
std::vector<BigInt> cobipartite_table(int n);
std::vector<BigInt> cobipartite_table_scan(int n, const EnumOptions& options = {});

CountResult count_cobipartite(int n, int m,
                              CountMethod method = CountMethod::kAuto,
                              const EnumOptions& options = {});

struct ClawfreeProbability {
  double probability = 0.0;
  double rate = 0.0;                      // -log2(P) / C(n, 2)
  double conditional_edge_density = 0.0;  // E[e(G) | claw-free] / C(n, 2)
};

ClawfreeProbability exact_clawfree_probability(int n, double p,
                                               const EnumOptions& options = {});

/// |B_c(n, m)| / |C(n, m)|; throws std::domain_error if |C(n, m)| = 0.
double fraction_cobipartite(int n, int m, const EnumOptions& options = {});

/// Labeled 3-regular claw-free graphs on v vertices; v even, v <= 12.
CountResult count_cubic_clawfree(int v, const EnumOptions& options = {});
/// Labeled 3-regular graphs on v vertices (no claw filter).
BigInt count_cubic(int v);

}  // namespace clawlab

#endif  // CLAWLAB_ENUMERATE_HPP_

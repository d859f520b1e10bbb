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

#ifndef CLAWLAB_MONTECARLO_HPP_
#define CLAWLAB_MONTECARLO_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "clawlab/graph.hpp"
#include "clawlab/graphon.hpp"
#include "clawlab/parallel.hpp"

namespace clawlab {

struct TrialConfig {
  int n = 0;
  std::optional<double> p;
  std::optional<int> m;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  int threads = 0;
  const CancellationToken* token = nullptr;
};

struct EstimateResult {
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 1.0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  /// Zero successes: [0, 1 - 0.05^(1/trials)] instead of the Wilson interval.
  bool one_sided = false;
};

/// Wilson score interval at 95%.
EstimateResult wilson_interval(std::uint64_t successes, std::uint64_t trials);

Graph sample_gnp(int n, double p, std::uint64_t seed);
/// Uniform m-edge graph; throws std::invalid_argument if m > C(n, 2).
Graph sample_gnm(int n, int m, std::uint64_t seed);

struct ClawfreeEstimate {
  EstimateResult probability;
  /// -log2(P)/C(n,2) at the estimate and interval ends (infinite if P = 0).
  double rate = 0.0;
  double rate_lower = 0.0;
  double rate_upper = 0.0;
};

/// G(n, p) when cfg.p is set, G(n, m) when cfg.m is set.
ClawfreeEstimate estimate_clawfree_prob(const TrialConfig& cfg);

struct ConditionalReport {
  int n = 0;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;
  bool starved = false;
  double mean_edge_density = 0.0;
  EstimateResult cobipartite;
  double mean_defect = 0.0;  // b(G) / n^2 over accepted samples
  bool defect_exact = true;  // false when the heuristic division search ran
  /// Certified upper bound on P(co-bipartite | claw-free), valid for n >= 3:
  /// U / ((1-p)^N + U) with U a union bound on P(co-bipartite).
  double cobipartite_fraction_bound = 1.0;
};

/// Rejection sampling of G(n, p) conditioned on being claw-free.
ConditionalReport conditional_structure(const TrialConfig& cfg);

/// U / ((1-p)^N + U), U = sum_a C(n,a)/2 p^{C(a,2)+C(n-a,2)}.
double cobipartite_conditional_bound(int n, double p);

using SubsetPredicate = std::function<bool(std::uint32_t)>;

struct DominationReport {
  int n = 0;
  int m = 0;
  double p_uniform = 0.0;    // P_S{A}, |S| = m uniformly
  double p_binomial = 0.0;   // P_T{A}, T ~ Bin(n, m/n)
  double factor = 0.0;       // sqrt(8 n p)
  bool holds = false;
};

inline constexpr int kMaxDominationOrder = 20;

/// Exact summation over all 2^n subsets; 1 <= m <= n <= 20.
DominationReport check_gnm_gnp_domination(int n, int m, const SubsetPredicate& predicate);

struct DominationBattery {
  int n = 0;
  int predicates = 0;
  int violations = 0;
  double worst_ratio = 0.0;  // max of P_S / (factor * P_T)
};

/// Random predicates (random families, size windows, element conditions)
/// over all m in [1, n].
DominationBattery domination_battery(int n, int predicates, std::uint64_t seed);

struct ConcentrationReport {
  double area = 0.0;          // |A|
  double frequency = 0.0;     // empirical P{Y <= (1 - delta)|A| C(n,2)}
  double bound = 1.0;         // exp(-delta^2 |A|^2 n / 32)
  double margin = 0.0;        // 3 sigma at the bound
  bool consistent = true;     // frequency <= bound + margin
  std::uint64_t trials = 0;
};

/// region: step graphon with values in {0, 1} marking A.
ConcentrationReport concentration_spotcheck(const Graphon& region, int n, double delta,
                                            std::uint64_t trials, std::uint64_t seed,
                                            int threads = 0);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Two-sample homogeneity test; bins with expected count below 5 are pooled
/// with their neighbors.
ChiSquareResult chi_square_homogeneity(const std::map<int, std::uint64_t>& a,
                                       const std::map<int, std::uint64_t>& b);

/// Edge-count histograms of G(n, p) and of G(n, W) for W constant p.
std::pair<std::map<int, std::uint64_t>, std::map<int, std::uint64_t>>
edge_count_histograms(int n, double p, std::uint64_t samples, std::uint64_t seed,
                      int threads = 0);

}  // namespace clawlab

#endif  // CLAWLAB_MONTECARLO_HPP_

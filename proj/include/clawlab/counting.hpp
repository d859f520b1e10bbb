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

#ifndef CLAWLAB_COUNTING_HPP_
#define CLAWLAB_COUNTING_HPP_

#include <cstdint>

#include "clawlab/enumerate.hpp"

namespace clawlab {

/// log2 C(n, k): exact big integers up to n = 1000, log-gamma beyond.
/// Returns -infinity when k < 0 or k > n.
double log2_binomial(long long n, long long k);
/// The same quantity through log-gamma alone.
double log2_binomial_lgamma(long long n, long long k);

/// (r+1)/2 + sum_{k>=1} (2 gamma - 1)^{k^2 + r k}, truncated at the first
/// term below 1e-15, then extra_terms more.
double bc_series_constant(double gamma, int r, int extra_terms = 0);

struct AsymptoticTerm {
  int n = 0;
  long long m = 0;
  double gamma = 0.0;
  int r = 0;
  double series = 0.0;
  int series_terms = 0;
  double log2_vertex_binomial = 0.0;  // log2 C(n, floor(n/2))
  double log2_edge_binomial = 0.0;    // log2 C(floor(n^2/4), m - C(floor(n/2),2) - C(ceil(n/2),2))
  double log2_total = 0.0;
};

/// Asymptotic co-bipartite count; gamma = m / C(n, 2) must lie in (1/2, 1).
AsymptoticTerm bc_asymptotic(int n, long long m);

struct BcComparison {
  int n = 0;
  int m = 0;
  double gamma = 0.0;
  double log2_exact = 0.0;
  double log2_asymptotic = 0.0;
  double ratio = 0.0;            // exact / asymptotic
  double log2_lower_bound = 0.0; // one balanced bipartition, both parts cliques
};

/// Exact count from the bipartite DP against bc_asymptotic; n <= 14.
BcComparison compare_bc(int n, int m);

struct InequalityItem {
  std::uint64_t tuples = 0;
  std::uint64_t violations = 0;
};

struct InequalityReport {
  /// C(n-j, m-j)/C(n, m) <= e^{-(1-m/n) j}, 0 <= j <= m <= n.
  InequalityItem first;
  /// C(n, m+j)/C(n, m) <= ((n-m)/m)^j, j >= -m, m <= n - max(1, j).
  InequalityItem second_ratio;
  /// ((n-m)/m)^j <= e^{-(1-(n-m)/m) j} for j >= 0.
  InequalityItem second_exponential;
  /// C(n-j, m+k)/C(n, m) <= ((n-m)/n)^j ((n-m)/m)^k, j, k >= 0, m+k <= n-j.
  InequalityItem third;
  /// The first bound and the exponential link sampled at negative j, where
  /// they can fail; counts only, never asserted.
  InequalityItem first_negative_j;
  InequalityItem second_exponential_negative_j;
};

/// tuples_per_item random integer tuples per item, exact rational or
/// 50-digit comparisons; n ranges over [1, max_n].
InequalityReport binomial_inequality_suite(std::uint64_t tuples_per_item = 10000,
                                           std::uint64_t seed = 0, int max_n = 60);

struct HypergeomRatio {
  double exact = 0.0;  // C(n-k, m-l) / C(n, m)
  double limit = 0.0;  // (m/n)^l (1 - m/n)^(k-l)
  double relative_gap = 0.0;
};

/// Requires k <= n and l <= m <= n + min(0, k - l).
HypergeomRatio hypergeom_binomial_ratio(int n, int m, int k, int l);

}  // namespace clawlab

#endif  // CLAWLAB_COUNTING_HPP_

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

#ifndef CLAWLAB_COLORINGS_HPP_
#define CLAWLAB_COLORINGS_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "clawlab/parallel.hpp"

namespace clawlab {

enum class Color : std::uint8_t { kRed = 0, kGreen = 1, kBlue = 2 };

/// Red/green/blue coloring of E(K_n), two bits per edge. Edges are indexed
/// in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
class EdgeColoring {
 public:
  static constexpr int kMaxOrder = 64;
  /// Largest n whose base-3 code fits in 64 bits.
  static constexpr int kMaxCodeOrder = 9;

  /// All edges green.
  explicit EdgeColoring(int n);

  int order() const noexcept { return n_; }
  int edge_count() const noexcept { return n_ * (n_ - 1) / 2; }
  int edge_index(int u, int v) const;

  Color color(int u, int v) const { return color_at(edge_index(u, v)); }
  Color color_at(int index) const {
    return static_cast<Color>((words_[index / 32] >> (2 * (index % 32))) & 3U);
  }
  void set(int u, int v, Color c) { set_at(edge_index(u, v), c); }
  void set_at(int index, Color c);

  int count(Color c) const;

  /// sum_k digit_k 3^k over the lexicographic edge index k, with R = 0,
  /// G = 1, B = 2; n <= 9.
  std::uint64_t code() const;
  static EdgeColoring from_code(int n, std::uint64_t code);

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

/// No (red, red, red) and no (red, red, green) triangle.
bool is_valid(const EdgeColoring& phi);

/// Number of edges colored differently.
int hamming_distance(const EdgeColoring& a, const EdgeColoring& b);

inline constexpr int kMaxBoundScanOrder = 6;
inline constexpr int kMaxExtremalOrder = 8;
inline constexpr int kMaxStabilityOrder = 6;

struct BoundReport {
  int n = 0;
  std::uint64_t valid_count = 0;
  std::uint64_t violations = 0;
  std::uint64_t equality_count = 0;
  bool equality_matches_e = false;
  /// e_r - e_b over valid colorings -> count.
  std::map<int, std::uint64_t> excess_histogram;
};

/// Exhaustive scan of all 3^C(n,2) colorings; n <= 6.
BoundReport verify_bound(int n, int threads = 0, const CancellationToken* token = nullptr);

/// Sorted codes of the extremal families; n <= 8.
std::vector<std::uint64_t> extremal_e_codes(int n);
std::vector<std::uint64_t> extremal_f_codes(int n);
std::vector<EdgeColoring> generate_extremal_e(int n);
std::vector<EdgeColoring> generate_extremal_f(int n);

/// Minimum Hamming distance from phi to F(n); n <= 6.
int hamming_to_extremal(const EdgeColoring& phi);

struct StabilityBucket {
  std::uint64_t count = 0;
  int max_distance = 0;
};

/// Valid colorings grouped by e_r - e_b, with the largest distance to F(n)
/// seen in each group; n <= 6 (n = 6 is slow).
std::map<int, StabilityBucket> stability_profile(int n, int threads = 0);

struct StabilityReport {
  int n = 0;
  double delta = 0.0;
  std::uint64_t admitted = 0;
  int max_distance = 0;
  double max_normalized = 0.0;  // max distance / n^2
  std::map<int, std::uint64_t> distance_histogram;
};

/// Valid colorings with e_r >= e_b + floor(n/2) - delta n^2 and their
/// distances to F(n); n <= 5.
StabilityReport stability_scan(int n, double delta, int threads = 0);

}  // namespace clawlab

#endif  // CLAWLAB_COLORINGS_HPP_

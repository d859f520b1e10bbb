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

#ifndef CLAWLAB_CUTMETRIC_HPP_
#define CLAWLAB_CUTMETRIC_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "clawlab/graph.hpp"
#include "clawlab/graphon.hpp"
#include "clawlab/parallel.hpp"

namespace clawlab {

enum class Exactness { kExact, kUpperBound };

struct CutWitness {
  std::uint64_t rows = 0;  // S
  std::uint64_t cols = 0;  // T
};

struct CutResult {
  double value = 0.0;
  std::optional<CutWitness> witness;
  Exactness exactness = Exactness::kExact;
  /// For relabeling searches: sigma with B(i, j) = A(sigma[i], sigma[j]).
  std::vector<int> permutation;
};

inline constexpr int kMaxExactCutOrder = 24;
inline constexpr int kMaxExactDeltaOrder = 6;

/// (1/n^2) |sum_{i in S, j in T} a(i, j)| recomputed from the witness in
/// index order.
template <typename Derived>
double witness_value(const Eigen::MatrixBase<Derived>& a, const CutWitness& w) {
  using Scalar = typename Derived::Scalar;
  Scalar sum(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (!((w.rows >> i) & 1U)) continue;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if ((w.cols >> j) & 1U) sum += a(i, j);
    }
  }
  using std::abs;
  const double n = static_cast<double>(a.rows());
  return static_cast<double>(abs(sum)) / (n * n);
}

/// Exact cut norm: every row set S (Gray code over the column sums), with the
/// best column set for fixed S taken as the positive (or negative) columns.
template <typename Derived>
CutResult matrix_cut_norm(const Eigen::MatrixBase<Derived>& a, int threads = 1,
                          const CancellationToken* token = nullptr) {
  using Scalar = typename Derived::Scalar;
  const int n = static_cast<int>(a.rows());
  if (a.cols() != a.rows()) throw std::invalid_argument("cut norm needs a square matrix");
  if (n > kMaxExactCutOrder) throw std::out_of_range("exact cut norm needs n <= 24");
  CutResult out;
  if (n == 0) return out;
  const int high = std::min(n, 6);
  const int low = n - high;
  const std::size_t tasks = std::size_t{1} << high;

  struct Best {
    Scalar value = Scalar(-1);
    std::uint64_t rows = 0;
    bool negative = false;
  };
  std::vector<Best> best(tasks);
  // Row-major copy: the Gray-code update adds or removes one whole row.
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> m = a;
  parallel_for_index(tasks, threads, token, [&](std::size_t task) {
    std::vector<Scalar> colsum(n, Scalar(0));
    std::uint64_t rows = static_cast<std::uint64_t>(task) << low;
    for (int i = low; i < n; ++i) {
      if ((rows >> i) & 1U) {
        for (int j = 0; j < n; ++j) colsum[j] += m(i, j);
      }
    }
    Best local;
    // pos = (sum|c| + sum c) / 2 and neg = (sum|c| - sum c) / 2.
    auto consider = [&] {
      using std::abs;
      Scalar total(0), magnitude(0);
      for (int j = 0; j < n; ++j) {
        total += colsum[j];
        magnitude += abs(colsum[j]);
      }
      const Scalar pos = (magnitude + total) / Scalar(2);
      const Scalar neg = (magnitude - total) / Scalar(2);
      if (pos > local.value) local = {pos, rows, false};
      if (neg > local.value) local = {neg, rows, true};
    };
    consider();
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t t = 1; t < steps; ++t) {
      const int i = std::countr_zero(t);
      rows ^= std::uint64_t{1} << i;
      const Scalar* row = m.data() + static_cast<std::ptrdiff_t>(i) * n;
      if ((rows >> i) & 1U) {
        for (int j = 0; j < n; ++j) colsum[j] += row[j];
      } else {
        for (int j = 0; j < n; ++j) colsum[j] -= row[j];
      }
      consider();
    }
    best[task] = local;
  });

  Best winner = best[0];
  for (const auto& b : best) {
    if (b.value > winner.value) winner = b;
  }
  CutWitness w{winner.rows, 0};
  for (int j = 0; j < n; ++j) {
    Scalar s(0);
    for (int i = 0; i < n; ++i) {
      if ((w.rows >> i) & 1U) s += m(i, j);
    }
    if (winner.negative ? s < Scalar(0) : s > Scalar(0)) w.cols |= std::uint64_t{1} << j;
  }
  out.witness = w;
  out.value = witness_value(m, w);
  out.exactness = Exactness::kExact;
  return out;
}

/// Adjacency matrix with ones (default) or zeros on the diagonal.
Eigen::MatrixXd adjacency_matrix(const Graph& g, bool diagonal_ones = true);

/// d(G, H) = cut norm of A_G - A_H; equal orders, n <= 24.
CutResult graph_cut_distance(const Graph& g, const Graph& h, bool diagonal_ones = true,
                             int threads = 1);

struct AnnealOptions {
  int restarts = 4;
  int iterations = 2000;
  std::uint64_t seed = 0;
  int threads = 1;
  /// Skip the exhaustive permutation scan even when n <= 6.
  bool force_heuristic = false;
};

/// Minimum over relabelings of H of the cut distance; exact for n <= 6,
/// simulated annealing (flagged upper bound) beyond.
CutResult delta_hat(const Graph& g, const Graph& h, const AnnealOptions& options = {});

/// Upper bound on the distance between G and W through the n-th
/// discretization of W and a permutation search; n <= 24.
CutResult graph_graphon_distance(const Graph& g, const Graphon& w,
                                 const AnnealOptions& options = {});

}  // namespace clawlab

#endif  // CLAWLAB_CUTMETRIC_HPP_

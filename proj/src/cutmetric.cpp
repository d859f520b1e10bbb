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

#include "clawlab/cutmetric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "clawlab/random.hpp"

namespace clawlab {

Eigen::MatrixXd adjacency_matrix(const Graph& g, bool diagonal_ones) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  if (diagonal_ones) a.diagonal().setOnes();
  return a;
}

CutResult graph_cut_distance(const Graph& g, const Graph& h, bool diagonal_ones, int threads) {
  if (g.order() != h.order()) throw std::invalid_argument("cut distance needs equal orders");
  return matrix_cut_norm(adjacency_matrix(g, diagonal_ones) - adjacency_matrix(h, diagonal_ones),
                         threads);
}

namespace {

constexpr int kMaxExactObjectiveOrder = 12;

Eigen::MatrixXd permuted(const Eigen::MatrixXd& a, const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = a(sigma[i], sigma[j]);
  }
  return b;
}

// Simulated annealing over relabelings sigma of `moving`, minimizing
// objective(target - moving relabeled). The final value is always the exact
// cut norm at the chosen relabeling, and never worse than the identity.
CutResult anneal_relabeling(const Eigen::MatrixXd& target, const Eigen::MatrixXd& moving,
                            const std::function<double(const Eigen::MatrixXd&)>& objective,
                            bool objective_is_cut_norm, const AnnealOptions& options) {
  const int n = static_cast<int>(target.rows());
  const int restarts = std::max(1, options.restarts);
  std::vector<std::vector<int>> found(restarts);
  std::vector<double> found_value(restarts);

  parallel_for_index(static_cast<std::size_t>(restarts), options.threads, nullptr,
                     [&](std::size_t r) {
    const CounterRng rng(options.seed, r);
    std::uint64_t counter = 0;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    if (r > 0) {
      for (int i = n - 1; i > 0; --i) {
        std::swap(sigma[i], sigma[rng.below(static_cast<std::uint64_t>(i) + 1, counter)]);
      }
    }
    double current = objective(target - permuted(moving, sigma));
    std::vector<int> best_sigma = sigma;
    double best = current;
    const double t_start = 0.1 * (current + 1e-9);
    const double t_end = 1e-4 * t_start;
    const int iters = std::max(1, options.iterations);
    for (int it = 0; it < iters && n >= 2; ++it) {
      const double temp = t_start * std::pow(t_end / t_start, static_cast<double>(it) / iters);
      const int a = static_cast<int>(rng.below(n, counter));
      int b = static_cast<int>(rng.below(n - 1, counter));
      if (b >= a) ++b;
      std::swap(sigma[a], sigma[b]);
      const double next = objective(target - permuted(moving, sigma));
      const double delta = next - current;
      if (delta <= 0.0 || rng.uniform(counter++) < std::exp(-delta / temp)) {
        current = next;
        if (current < best) {
          best = current;
          best_sigma = sigma;
        }
      } else {
        std::swap(sigma[a], sigma[b]);
      }
    }
    found[r] = best_sigma;
    found_value[r] = best;
  });

  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  CutResult result = matrix_cut_norm(target - moving, options.threads);
  result.permutation = identity;
  // A proxy objective only ranks restarts; the exact norm is paid once.
  std::vector<int> chosen(restarts);
  std::iota(chosen.begin(), chosen.end(), 0);
  if (!objective_is_cut_norm) {
    chosen = {static_cast<int>(std::min_element(found_value.begin(), found_value.end()) -
                               found_value.begin())};
  }
  for (int r : chosen) {
    const auto& sigma = found[r];
    CutResult candidate = matrix_cut_norm(target - permuted(moving, sigma), options.threads);
    if (candidate.value < result.value) {
      result = candidate;
      result.permutation = sigma;
    }
  }
  result.exactness = Exactness::kUpperBound;
  return result;
}

}  // namespace

CutResult delta_hat(const Graph& g, const Graph& h, const AnnealOptions& options) {
  if (g.order() != h.order()) throw std::invalid_argument("delta_hat needs equal orders");
  const int n = g.order();
  if (n > kMaxExactCutOrder) throw std::out_of_range("delta_hat needs n <= 24");
  const Eigen::MatrixXd a = adjacency_matrix(g);
  const Eigen::MatrixXd b = adjacency_matrix(h);
  if (n <= kMaxExactDeltaOrder && !options.force_heuristic) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    CutResult best;
    best.value = std::numeric_limits<double>::infinity();
    do {
      CutResult c = matrix_cut_norm(a - permuted(b, sigma));
      if (c.value < best.value) {
        best = c;
        best.permutation = sigma;
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    best.exactness = Exactness::kExact;
    return best;
  }
  if (n <= kMaxExactObjectiveOrder) {
    return anneal_relabeling(
        a, b, [](const Eigen::MatrixXd& d) { return matrix_cut_norm(d).value; }, true, options);
  }
  return anneal_relabeling(
      a, b, [](const Eigen::MatrixXd& d) { return d.squaredNorm(); }, false, options);
}

CutResult graph_graphon_distance(const Graph& g, const Graphon& w, const AnnealOptions& options) {
  const int n = g.order();
  if (n > kMaxExactCutOrder) throw std::out_of_range("graph-graphon distance needs n <= 24");
  const Eigen::MatrixXd target = -discretize(w, n);
  // Relabel the graph against the fixed discretization: minimize the norm of
  // A_G^sigma - H_n, written as (-H_n) - (-A_G^sigma).
  const Eigen::MatrixXd moving = -adjacency_matrix(g);
  return anneal_relabeling(
      target, moving, [](const Eigen::MatrixXd& d) { return d.squaredNorm(); }, false, options);
}

}  // namespace clawlab

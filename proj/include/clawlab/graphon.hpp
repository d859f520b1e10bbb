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

#ifndef CLAWLAB_GRAPHON_HPP_
#define CLAWLAB_GRAPHON_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "clawlab/graph.hpp"
#include "clawlab/parallel.hpp"
#include "json.hpp"

namespace clawlab {

/// Block step function on [0,1]^2. Blocks are left-open intervals
/// (b_{i-1}, b_i], with 0 assigned to the first block.
template <typename Scalar = double>
class StepGraphon {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  StepGraphon(Vector boundaries, Matrix values)
      : boundaries_(std::move(boundaries)), values_(std::move(values)) {
    const Eigen::Index k = values_.rows();
    if (k < 1 || values_.cols() != k || boundaries_.size() != k + 1) {
      throw std::invalid_argument("step graphon needs k+1 boundaries and a k x k value matrix");
    }
    if (boundaries_(0) != Scalar(0) || boundaries_(k) != Scalar(1)) {
      throw std::invalid_argument("step graphon boundaries must start at 0 and end at 1");
    }
    for (Eigen::Index i = 0; i < k; ++i) {
      if (!(boundaries_(i) < boundaries_(i + 1))) {
        throw std::invalid_argument("step graphon boundaries must be strictly increasing");
      }
      for (Eigen::Index j = 0; j < k; ++j) {
        const Scalar v = values_(i, j);
        if (!(v >= Scalar(0) && v <= Scalar(1))) {
          throw std::invalid_argument("step graphon values must lie in [0, 1]");
        }
        if (v != values_(j, i)) throw std::invalid_argument("step graphon values must be symmetric");
      }
    }
  }

  static StepGraphon constant(Scalar p) {
    Vector b(2);
    b << Scalar(0), Scalar(1);
    return StepGraphon(b, Matrix::Constant(1, 1, p));
  }

  Eigen::Index blocks() const noexcept { return values_.rows(); }
  const Vector& boundaries() const noexcept { return boundaries_; }
  const Matrix& values() const noexcept { return values_; }
  Vector masses() const {
    return boundaries_.tail(blocks()) - boundaries_.head(blocks());
  }

  Eigen::Index block_of(Scalar x) const {
    if (!(x >= Scalar(0) && x <= Scalar(1))) {
      throw std::domain_error("graphon argument must lie in [0, 1]");
    }
    const Scalar* first = boundaries_.data() + 1;
    const Scalar* last = boundaries_.data() + boundaries_.size();
    const Eigen::Index i = std::lower_bound(first, last, x) - first;
    return std::min(i, blocks() - 1);
  }

  Scalar operator()(Scalar x, Scalar y) const { return values_(block_of(x), block_of(y)); }

  template <typename Other>
  StepGraphon<Other> cast() const {
    return StepGraphon<Other>(boundaries_.template cast<Other>(),
                              values_.template cast<Other>());
  }

 private:
  Vector boundaries_;
  Matrix values_;
};

using Graphon = StepGraphon<double>;

namespace detail {

template <typename Scalar>
Scalar entropy_term(Scalar x) {
  using std::log;
  if (x <= Scalar(0) || x >= Scalar(1)) return Scalar(0);
  const Scalar ln2 = log(Scalar(2));
  return -(x * log(x) + (Scalar(1) - x) * log(Scalar(1) - x)) / ln2;
}

template <typename Scalar>
Scalar rel_entropy_term(Scalar x, Scalar p) {
  using std::log;
  const Scalar ln2 = log(Scalar(2));
  Scalar out(0);
  if (x > Scalar(0)) out += x * log(p / x) / ln2;
  if (x < Scalar(1)) out += (Scalar(1) - x) * log((Scalar(1) - p) / (Scalar(1) - x)) / ln2;
  return out;
}

template <typename Scalar, typename Term>
Scalar block_sum(const StepGraphon<Scalar>& w, Term term) {
  const auto mu = w.masses();
  Scalar total(0);
  for (Eigen::Index i = 0; i < w.blocks(); ++i) {
    for (Eigen::Index j = 0; j < w.blocks(); ++j) {
      total += mu(i) * mu(j) * term(w.values()(i, j));
    }
  }
  return total;
}

// Sum over all maps V(F) -> blocks of prod mu * prod over pairs; the first
// vertex's block is the unit of parallel work.
template <typename Scalar>
Scalar assignment_sum(const Graph& f, const StepGraphon<Scalar>& w, bool induced, int threads) {
  constexpr int kMaxPatternOrder = 6;
  constexpr double kMaxAssignments = 1e8;
  const int v = f.order();
  const Eigen::Index k = w.blocks();
  if (v > kMaxPatternOrder) {
    throw std::out_of_range("density evaluation needs v(F) <= 6");
  }
  const double cost = std::pow(static_cast<double>(k), v);
  if (cost > kMaxAssignments) {
    throw std::out_of_range("density evaluation would visit " + std::to_string(cost) +
                            " block assignments (limit 1e8)");
  }
  const auto mu = w.masses();
  const auto& val = w.values();
  std::vector<Scalar> partial(k, Scalar(0));
  parallel_for_index(static_cast<std::size_t>(k), threads, nullptr, [&](std::size_t first) {
    std::vector<Eigen::Index> block(v, 0);
    block[0] = static_cast<Eigen::Index>(first);
    Scalar sum(0);
    for (;;) {
      Scalar term(1);
      for (int a = 0; a < v && term != Scalar(0); ++a) {
        term *= mu(block[a]);
        for (int b = a + 1; b < v; ++b) {
          const Scalar x = val(block[a], block[b]);
          if (f.adjacent(a, b)) {
            term *= x;
          } else if (induced) {
            term *= Scalar(1) - x;
          }
        }
      }
      sum += term;
      int pos = v - 1;
      while (pos >= 1 && ++block[pos] == k) block[pos--] = 0;
      if (pos < 1) break;
    }
    partial[first] = sum;
  });
  Scalar total(0);
  for (const auto& s : partial) total += s;
  return total;
}

}  // namespace detail

/// t(K_2, W) = mu^T V mu.
template <typename Scalar>
Scalar edge_density(const StepGraphon<Scalar>& w) {
  const auto mu = w.masses();
  return mu.dot(w.values() * mu);
}

/// t(F, W); v(F) <= 6.
template <typename Scalar>
Scalar hom_density(const Graph& f, const StepGraphon<Scalar>& w, int threads = 1) {
  return detail::assignment_sum(f, w, false, threads);
}

/// t_ind(F, W); non-edges of F contribute (1 - W).
template <typename Scalar>
Scalar induced_density(const Graph& f, const StepGraphon<Scalar>& w, int threads = 1) {
  return detail::assignment_sum(f, w, true, threads);
}

template <typename Scalar>
Scalar entropy(const StepGraphon<Scalar>& w) {
  return detail::block_sum(w, [](Scalar x) { return detail::entropy_term(x); });
}

/// I_p(W); throws std::domain_error unless p in (0, 1).
template <typename Scalar>
Scalar rel_entropy(const StepGraphon<Scalar>& w, Scalar p) {
  if (!(p > Scalar(0) && p < Scalar(1))) throw std::domain_error("p must lie in (0, 1)");
  return detail::block_sum(w, [p](Scalar x) { return detail::rel_entropy_term(x, p); });
}

/// Measure of {0 < W < 1}.
template <typename Scalar>
Scalar rand_measure(const StepGraphon<Scalar>& w) {
  return detail::block_sum(
      w, [](Scalar x) { return x > Scalar(0) && x < Scalar(1) ? Scalar(1) : Scalar(0); });
}

/// n x n matrix with entry (i, j) = W(i/n, j/n), 1-indexed.
template <typename Scalar>
typename StepGraphon<Scalar>::Matrix discretize(const StepGraphon<Scalar>& w, int n) {
  if (n < 1) throw std::invalid_argument("discretization order must be positive");
  std::vector<Eigen::Index> block(n);
  for (int i = 0; i < n; ++i) block[i] = w.block_of(Scalar(i + 1) / Scalar(n));
  typename StepGraphon<Scalar>::Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = w.values()(block[i], block[j]);
  }
  return out;
}

/// Finite element of the nonincreasing-gap sequence family: lambda_0 = 0,
/// strictly increasing, at most 1, gaps nonincreasing.
class LambdaSeq {
 public:
  /// Throws std::invalid_argument naming the violated condition.
  explicit LambdaSeq(std::vector<double> lambdas, double tail_mass_sq = 0.0);

  /// Empty string when valid, else the violated condition.
  static std::string violation(const std::vector<double>& lambdas);

  /// Gaps first_gap * ratio^i truncated once the remaining squared mass falls
  /// below tolerance; the dropped mass is reported by tail_mass_sq().
  static LambdaSeq geometric(double first_gap, double ratio, double tolerance = 1e-14);

  const std::vector<double>& lambdas() const noexcept { return lambdas_; }
  std::vector<double> masses() const;
  double sum_sq_masses() const;
  /// Sum of squared gaps dropped by truncation.
  double tail_mass_sq() const noexcept { return tail_mass_sq_; }

 private:
  std::vector<double> lambdas_;
  double tail_mass_sq_ = 0.0;
};

Graphon lambda_graphon(const LambdaSeq& lambda);
/// gamma in [(5 - sqrt5)/4, 1).
Graphon wstar_graphon(double gamma);
Graphon constant_graphon(double p);

/// W-random graph: latent positions and edge coins from a counter-based
/// stream keyed by seed, so the output is a pure function of (W, n, seed).
Graph sample_wgraph(const Graphon& w, int n, std::uint64_t seed);

nlohmann::json graphon_to_json(const Graphon& w);
Graphon graphon_from_json(const nlohmann::json& j);

}  // namespace clawlab

#endif  // CLAWLAB_GRAPHON_HPP_

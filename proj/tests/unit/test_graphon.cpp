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

#include "clawlab/entropy.hpp"
#include "clawlab/graph.hpp"
#include "clawlab/graphon.hpp"
#include "clawlab/random.hpp"
#include "clawlab/variational.hpp"
#include "doctest.h"

using namespace clawlab;

namespace {

Graphon random_step_graphon(const CounterRng& rng, std::uint64_t& counter) {
  const int k = 1 + static_cast<int>(rng.below(5, counter));
  std::vector<double> cuts;
  for (int i = 0; i + 1 < k; ++i) cuts.push_back(rng.uniform(counter++));
  std::sort(cuts.begin(), cuts.end());
  Graphon::Vector b(k + 1);
  b(0) = 0.0;
  for (int i = 0; i + 1 < k; ++i) b(i + 1) = cuts[i];
  b(k) = 1.0;
  for (int i = 0; i < k; ++i) {
    if (!(b(i) < b(i + 1))) return Graphon::constant(0.5);
  }
  Graphon::Matrix v(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) v(i, j) = v(j, i) = rng.uniform(counter++);
  }
  return Graphon(b, v);
}

std::vector<double> random_lambdas(const CounterRng& rng, std::uint64_t& counter) {
  const int k = 1 + static_cast<int>(rng.below(6, counter));
  std::vector<double> gaps(k);
  for (auto& g : gaps) g = rng.uniform_open_closed(counter++);
  std::sort(gaps.begin(), gaps.end(), std::greater<>());
  double total = 0.0;
  for (double g : gaps) total += g;
  const double scale = rng.uniform_open_closed(counter++) / total;
  std::vector<double> l{0.0};
  for (double g : gaps) l.push_back(l.back() + g * scale);
  l.back() = std::min(l.back(), 1.0);
  return l;
}

}  // namespace

TEST_SUITE("graphon") {

TEST_CASE("lambda graphon examples") {
  const auto w = lambda_graphon(LambdaSeq({0.0, 1.0}));
  CHECK(w.blocks() == 2);
  CHECK(w.values()(0, 0) == 1.0);
  CHECK(w.values()(0, 1) == doctest::Approx(rho()).epsilon(1e-15));
  CHECK(std::abs(edge_density(w) - (5.0 - std::sqrt(5.0)) / 4.0) < 1e-15);
  const auto half = lambda_graphon(LambdaSeq({0.0, 0.5}));
  CHECK(std::abs(edge_density(half) - (5.0 - std::sqrt(5.0)) / 16.0) < 1e-15);
  CHECK(LambdaSeq::violation({0.0, 0.5, 0.75}).empty());
  CHECK(lambda_graphon(LambdaSeq({0.0, 0.5, 0.75})).blocks() == 5);
  CHECK_FALSE(LambdaSeq::violation({0.0, 0.25, 0.75}).empty());
  CHECK_THROWS_AS(LambdaSeq({0.0, 0.25, 0.75}), std::invalid_argument);
  CHECK_THROWS_AS(LambdaSeq({0.1, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(LambdaSeq({0.0, 0.6, 1.2}), std::invalid_argument);
  CHECK_THROWS_AS(LambdaSeq({0.0, 0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("geometric lambda sequences") {
  const auto seq = LambdaSeq::geometric(0.5, 0.5, 1e-14);
  CHECK(seq.lambdas().size() > 10);
  CHECK(seq.tail_mass_sq() < 1e-14);
  CHECK(seq.sum_sq_masses() + seq.tail_mass_sq() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS(LambdaSeq::geometric(0.8, 0.5));
}

TEST_CASE("W* examples") {
  const auto w = wstar_graphon(0.8);
  CHECK(w.values()(0, 1) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(std::abs(edge_density(w) - 0.8) < 1e-15);
  const auto at_branch = wstar_graphon(gamma_star());
  const auto lam = lambda_graphon(LambdaSeq({0.0, 1.0}));
  CHECK((at_branch.values() - lam.values()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((at_branch.boundaries() - lam.boundaries()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(wstar_graphon(0.5), std::domain_error);
  CHECK_THROWS_AS(wstar_graphon(1.0), std::domain_error);
}

TEST_CASE("homomorphism and induced densities") {
  const Graph claw = claw_graph();
  for (double p : {0.0, 0.2, 0.5, 0.9}) {
    CHECK(std::abs(induced_density(claw, constant_graphon(p)) - std::pow(p, 3) * std::pow(1 - p, 3)) < 1e-15);
  }
  CHECK(induced_density(claw, wstar_graphon(0.8)) == 0.0);
  const CounterRng rng(21, 1);
  std::uint64_t counter = 0;
  const Graph k2 = complete_graph(2);
  for (int t = 0; t < 100; ++t) {
    const auto w = random_step_graphon(rng, counter);
    CHECK(std::abs(hom_density(k2, w) - edge_density(w)) < 1e-12);
  }
  const std::vector<Graph> patterns = {claw_graph(), paw_graph(), cycle_graph(5), complete_graph(4),
                                       path_graph(6), cycle_graph(6)};
  for (double p : {0.3, 0.5, 0.77}) {
    for (const auto& f : patterns) {
      CHECK(std::abs(hom_density(f, constant_graphon(p)) - std::pow(p, f.edge_count())) < 1e-12);
    }
  }
  CHECK_THROWS_AS(hom_density(empty_graph(7), constant_graphon(0.5)), std::out_of_range);
}

TEST_CASE("densities are independent of the thread count") {
  const CounterRng rng(22, 2);
  std::uint64_t counter = 0;
  const auto w = random_step_graphon(rng, counter);
  const double one = hom_density(cycle_graph(5), w, 1);
  CHECK(hom_density(cycle_graph(5), w, 2) == one);
  CHECK(hom_density(cycle_graph(5), w, 8) == one);
}

TEST_CASE("entropy examples") {
  CHECK(entropy(constant_graphon(0.5)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(entropy(constant_graphon(1.0)) == 0.0);
  for (double g : {0.7, 0.75, 0.8, 0.9, 0.99}) {
    const auto w = wstar_graphon(g);
    CHECK(std::abs(entropy(w) - 0.5 * binary_entropy(2 * g - 1)) < 1e-14);
    CHECK(std::abs(entropy(w) - r_star(g)) < 1e-12);
  }
  for (double p : {0.1, 0.5, 0.9}) CHECK(std::abs(rel_entropy(constant_graphon(p), p)) < 1e-15);
  CHECK_THROWS_AS(rel_entropy(constant_graphon(0.5), 0.0), std::domain_error);
  CHECK(rand_measure(wstar_graphon(0.8)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rand_measure(constant_graphon(1.0)) == 0.0);
}

TEST_CASE("lambda graphon block-sum identities on random valid sequences") {
  const CounterRng rng(23, 3);
  std::uint64_t counter = 0;
  const double c = (5.0 - std::sqrt(5.0)) / 4.0;
  for (int t = 0; t < 200; ++t) {
    const LambdaSeq seq(random_lambdas(rng, counter));
    const auto w = lambda_graphon(seq);
    const double s = seq.sum_sq_masses();
    CHECK(std::abs(edge_density(w) - s * c) < 1e-12);
    CHECK(std::abs(entropy(w) - s * 0.5 * binary_entropy(rho())) < 1e-12);
    CHECK(induced_density(claw_graph(), w) == 0.0);
  }
}

TEST_CASE("discretization") {
  const auto c = discretize(constant_graphon(0.3), 3);
  CHECK((c.array() == 0.3).all());
  Graphon::Matrix want(2, 2);
  want << 1.0, 0.6, 0.6, 1.0;
  CHECK((discretize(wstar_graphon(0.8), 2) - want).cwiseAbs().maxCoeff() < 1e-15);
  const auto w = wstar_graphon(0.8);
  CHECK(discretize(w, 1)(0, 0) == w(1.0, 1.0));
  CHECK_THROWS(discretize(w, 0));
}

TEST_CASE("discretization converges on random step graphons") {
  const CounterRng rng(24, 4);
  std::uint64_t counter = 0;
  double err8 = 0.0, err64 = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto w = random_step_graphon(rng, counter);
    err8 += std::abs(edge_density(w) - discretize(w, 8).mean());
    err64 += std::abs(edge_density(w) - discretize(w, 64).mean());
  }
  MESSAGE("mean |density - matrix mean|: n=8 " << err8 / 20 << ", n=64 " << err64 / 20);
  CHECK(err64 < err8);
}

TEST_CASE("W-random graph examples") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(sample_wgraph(constant_graphon(1.0), 9, seed) == complete_graph(9));
    CHECK(sample_wgraph(constant_graphon(0.0), 9, seed) == empty_graph(9));
  }
  const auto w = wstar_graphon(0.8);
  int with_claw = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) with_claw += has_induced_claw(sample_wgraph(w, 12, seed));
  CHECK(with_claw == 0);
  CHECK(sample_wgraph(w, 20, 5) == sample_wgraph(w, 20, 5));
}

TEST_CASE("W-random edge density within three standard errors") {
  const CounterRng rng(25, 5);
  std::uint64_t counter = 0;
  for (int t = 0; t < 5; ++t) {
    const auto w = random_step_graphon(rng, counter);
    const int n = 10;
    const int samples = 10000;
    double sum = 0.0, sum_sq = 0.0;
    for (int s = 0; s < samples; ++s) {
      const double d = sample_wgraph(w, n, 1000 * t + s).edge_count() / 45.0;
      sum += d;
      sum_sq += d * d;
    }
    const double mean = sum / samples;
    const double se = std::sqrt((sum_sq / samples - mean * mean) / samples);
    CHECK(std::abs(mean - edge_density(w)) <= 3 * se + 1e-12);
  }
}

TEST_CASE("step graphon validation") {
  Graphon::Vector b(3);
  b << 0.0, 0.5, 1.0;
  Graphon::Matrix asym(2, 2);
  asym << 1.0, 0.2, 0.3, 1.0;
  CHECK_THROWS_AS(Graphon(b, asym), std::invalid_argument);
  Graphon::Matrix big(2, 2);
  big << 1.5, 0.2, 0.2, 1.0;
  CHECK_THROWS_AS(Graphon(b, big), std::invalid_argument);
  Graphon::Vector bad(3);
  bad << 0.0, 0.7, 0.6;
  CHECK_THROWS_AS(Graphon(bad, Graphon::Matrix::Constant(2, 2, 0.5)), std::invalid_argument);
  CHECK_THROWS_AS(wstar_graphon(0.8)(1.5, 0.2), std::domain_error);
}

TEST_CASE("graphon JSON round trip and extended precision") {
  const auto w = lambda_graphon(LambdaSeq({0.0, 0.5, 0.75}));
  const auto back = graphon_from_json(graphon_to_json(w));
  CHECK(back.values() == w.values());
  CHECK(back.boundaries() == w.boundaries());
  const auto wl = wstar_graphon(0.8).cast<long double>();
  CHECK(std::abs(static_cast<double>(edge_density(wl)) - 0.8) < 1e-15);
}

}  // TEST_SUITE

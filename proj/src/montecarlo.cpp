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

#include "clawlab/montecarlo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "clawlab/random.hpp"

namespace clawlab {

namespace {

constexpr double kZ95 = 1.959963984540054;
constexpr std::uint64_t kBlock = 1024;
constexpr std::uint64_t kGnpStream = 0x474e50ULL;
constexpr std::uint64_t kGnmStream = 0x474e4dULL;
constexpr std::uint64_t kLatentStream = 0x4c4154454e54ULL;

int pairs_of(int n) { return n * (n - 1) / 2; }

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must lie in [0, 1]");
}

// Runs body(trial) -> accumulator for every trial in fixed-size blocks; the
// per-block results are merged in block order.
template <typename Acc, typename Body>
Acc run_trials(std::uint64_t trials, int threads, const CancellationToken* token, Body body) {
  const std::size_t blocks = static_cast<std::size_t>((trials + kBlock - 1) / kBlock);
  std::vector<Acc> partial(blocks);
  parallel_for_index(blocks, threads, token, [&](std::size_t b) {
    const std::uint64_t begin = b * kBlock;
    const std::uint64_t end = std::min(trials, begin + kBlock);
    for (std::uint64_t t = begin; t < end; ++t) body(t, partial[b]);
  });
  Acc total;
  for (const auto& a : partial) total += a;
  return total;
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

EstimateResult wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("interval needs at least one trial");
  if (successes > trials) throw std::invalid_argument("more successes than trials");
  EstimateResult r;
  r.trials = trials;
  r.successes = successes;
  const double n = static_cast<double>(trials);
  const double phat = successes / n;
  r.estimate = phat;
  if (successes == 0) {
    r.one_sided = true;
    r.lower = 0.0;
    r.upper = 1.0 - std::pow(0.05, 1.0 / n);
    return r;
  }
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = kZ95 / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  r.lower = std::max(0.0, center - half);
  r.upper = std::min(1.0, center + half);
  r.lower = std::min(r.lower, phat);
  r.upper = std::max(r.upper, phat);
  return r;
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  check_p(p);
  Graph g(n);
  const CounterRng rng(seed, kGnpStream);
  std::uint64_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (rng.uniform_open_closed(k) <= p) g.add_edge(i, j);
    }
  }
  return g;
}

Graph sample_gnm(int n, int m, std::uint64_t seed) {
  Graph g(n);
  const int total = pairs_of(n);
  if (m < 0 || m > total) throw std::invalid_argument("m must lie in [0, C(n,2)]");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const CounterRng rng(seed, kGnmStream);
  std::uint64_t counter = 0;
  for (int k = 0; k < m; ++k) {
    const int pick = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(total - k), counter));
    std::swap(pairs[k], pairs[pick]);
    g.add_edge(pairs[k].first, pairs[k].second);
  }
  return g;
}

ClawfreeEstimate estimate_clawfree_prob(const TrialConfig& cfg) {
  if (cfg.p.has_value() == cfg.m.has_value()) {
    throw std::invalid_argument("set exactly one of p and m");
  }
  if (cfg.trials == 0) throw std::invalid_argument("trials must be positive");
  if (cfg.p) check_p(*cfg.p);
  struct Count {
    std::uint64_t hits = 0;
    Count& operator+=(const Count& o) {
      hits += o.hits;
      return *this;
    }
  };
  const Count c = run_trials<Count>(cfg.trials, cfg.threads, cfg.token,
                                    [&](std::uint64_t t, Count& acc) {
    const std::uint64_t s = derive_seed(cfg.seed, t);
    const Graph g = cfg.p ? sample_gnp(cfg.n, *cfg.p, s) : sample_gnm(cfg.n, *cfg.m, s);
    acc.hits += !has_induced_claw(g);
  });
  ClawfreeEstimate out;
  out.probability = wilson_interval(c.hits, cfg.trials);
  const double total = pairs_of(cfg.n);
  auto rate = [total](double prob) {
    if (total == 0) return 0.0;
    return prob <= 0.0 ? std::numeric_limits<double>::infinity() : -std::log2(prob) / total;
  };
  out.rate = rate(out.probability.estimate);
  out.rate_lower = rate(out.probability.upper);
  out.rate_upper = rate(out.probability.lower);
  return out;
}

double cobipartite_conditional_bound(int n, double p) {
  check_p(p);
  if (n < 3) return 1.0;
  // log of the union bound U, via log-sum-exp.
  std::vector<double> logs;
  for (int a = 0; a <= n; ++a) {
    const double inside = pairs_of(a) + pairs_of(n - a);
    if (p == 0.0 && inside > 0) continue;
    logs.push_back(log_binomial(n, a) - std::log(2.0) + (p == 0.0 ? 0.0 : inside * std::log(p)));
  }
  if (logs.empty()) return 0.0;
  const double top = *std::max_element(logs.begin(), logs.end());
  double sum = 0.0;
  for (double l : logs) sum += std::exp(l - top);
  const double log_u = top + std::log(sum);
  if (p == 1.0) return 1.0;
  const double log_empty = pairs_of(n) * std::log1p(-p);
  // U / (E + U) = 1 / (1 + exp(log E - log U)).
  return std::min(1.0, 1.0 / (1.0 + std::exp(log_empty - log_u)));
}

ConditionalReport conditional_structure(const TrialConfig& cfg) {
  if (!cfg.p) throw std::invalid_argument("conditional structure needs p");
  check_p(*cfg.p);
  if (cfg.trials == 0) throw std::invalid_argument("trials must be positive");
  const bool exact = cfg.n <= kMaxExactDivisionOrder;
  struct Acc {
    std::uint64_t accepted = 0, cobipartite = 0;
    double edges = 0.0, defect = 0.0;
    Acc& operator+=(const Acc& o) {
      accepted += o.accepted;
      cobipartite += o.cobipartite;
      edges += o.edges;
      defect += o.defect;
      return *this;
    }
  };
  const Acc acc = run_trials<Acc>(cfg.trials, cfg.threads, cfg.token,
                                  [&](std::uint64_t t, Acc& a) {
    const Graph g = sample_gnp(cfg.n, *cfg.p, derive_seed(cfg.seed, t));
    if (has_induced_claw(g)) return;
    ++a.accepted;
    a.cobipartite += is_cobipartite(g).has_value();
    a.edges += g.edge_count();
    if (cfg.n >= 2) {
      a.defect += optimal_division(g, exact ? DivisionSearch::kExact : DivisionSearch::kHeuristic)
                      .defect;
    }
  });
  ConditionalReport r;
  r.n = cfg.n;
  r.p = *cfg.p;
  r.trials = cfg.trials;
  r.accepted = acc.accepted;
  r.starved = acc.accepted == 0;
  r.defect_exact = exact;
  r.cobipartite_fraction_bound = cobipartite_conditional_bound(cfg.n, *cfg.p);
  if (!r.starved) {
    const double total = pairs_of(cfg.n);
    r.mean_edge_density = total == 0 ? 0.0 : acc.edges / (acc.accepted * total);
    r.mean_defect = acc.defect / (acc.accepted * static_cast<double>(cfg.n) * cfg.n);
    r.cobipartite = wilson_interval(acc.cobipartite, acc.accepted);
  }
  return r;
}

DominationReport check_gnm_gnp_domination(int n, int m, const SubsetPredicate& predicate) {
  if (n < 1 || n > kMaxDominationOrder) throw std::out_of_range("domination check needs 1 <= n <= 20");
  if (m < 1 || m > n) throw std::invalid_argument("domination check needs 1 <= m <= n");
  const double p = static_cast<double>(m) / n;
  std::vector<double> weight(n + 1);
  for (int k = 0; k <= n; ++k) {
    weight[k] = std::pow(p, k) * std::pow(1.0 - p, n - k);
  }
  std::uint64_t uniform_hits = 0;
  double binomial = 0.0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (!predicate(s)) continue;
    const int k = std::popcount(s);
    if (k == m) ++uniform_hits;
    binomial += weight[k];
  }
  DominationReport r;
  r.n = n;
  r.m = m;
  r.p_uniform = uniform_hits / std::exp(log_binomial(n, m));
  r.p_binomial = binomial;
  r.factor = std::sqrt(8.0 * n * p);
  r.holds = r.p_uniform <= r.factor * r.p_binomial * (1.0 + 1e-12);
  return r;
}

DominationBattery domination_battery(int n, int predicates, std::uint64_t seed) {
  DominationBattery out;
  out.n = n;
  out.predicates = predicates;
  for (int i = 0; i < predicates; ++i) {
    const CounterRng rng(seed, static_cast<std::uint64_t>(i));
    std::uint64_t counter = 0;
    const int m = 1 + static_cast<int>(rng.below(n, counter));
    const int kind = static_cast<int>(rng.below(4, counter));
    SubsetPredicate pred;
    switch (kind) {
      case 0: {
        const double q = 0.001 + 0.5 * rng.uniform(counter++);
        const CounterRng member(rng.bits(counter++), 1);
        pred = [member, q](std::uint32_t s) { return member.uniform(s) < q; };
        break;
      }
      case 1: {
        int a = static_cast<int>(rng.below(n + 1, counter));
        int b = static_cast<int>(rng.below(n + 1, counter));
        if (a > b) std::swap(a, b);
        pred = [a, b](std::uint32_t s) {
          const int k = std::popcount(s);
          return k >= a && k <= b;
        };
        break;
      }
      case 2: {
        const auto x = static_cast<std::uint32_t>(rng.bits(counter++));
        const auto y = static_cast<std::uint32_t>(rng.bits(counter++));
        const std::uint32_t must = x & y & static_cast<std::uint32_t>(first_vertices(n));
        pred = [must](std::uint32_t s) { return (s & must) == must; };
        break;
      }
      default: {
        const int k = static_cast<int>(rng.below(n + 1, counter));
        pred = [k](std::uint32_t s) { return std::popcount(s) == k; };
        break;
      }
    }
    const auto r = check_gnm_gnp_domination(n, m, pred);
    if (!r.holds) ++out.violations;
    if (r.p_uniform > 0.0) {
      out.worst_ratio = std::max(out.worst_ratio, r.p_uniform / (r.factor * r.p_binomial));
    }
  }
  return out;
}

ConcentrationReport concentration_spotcheck(const Graphon& region, int n, double delta,
                                            std::uint64_t trials, std::uint64_t seed,
                                            int threads) {
  for (Eigen::Index i = 0; i < region.blocks(); ++i) {
    for (Eigen::Index j = 0; j < region.blocks(); ++j) {
      const double v = region.values()(i, j);
      if (v != 0.0 && v != 1.0) throw std::invalid_argument("region values must be 0 or 1");
    }
  }
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
  if (n < 2 || trials == 0) throw std::invalid_argument("need n >= 2 and trials >= 1");
  ConcentrationReport r;
  r.area = edge_density(region);
  r.trials = trials;
  const double threshold = (1.0 - delta) * r.area * pairs_of(n);
  struct Count {
    std::uint64_t hits = 0;
    Count& operator+=(const Count& o) {
      hits += o.hits;
      return *this;
    }
  };
  const Count c = run_trials<Count>(trials, threads, nullptr, [&](std::uint64_t t, Count& acc) {
    const CounterRng rng(derive_seed(seed, t), kLatentStream);
    std::vector<Eigen::Index> block(n);
    for (int i = 0; i < n; ++i) block[i] = region.block_of(rng.uniform(i));
    std::uint64_t y = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) y += region.values()(block[i], block[j]) == 1.0;
    }
    acc.hits += static_cast<double>(y) <= threshold;
  });
  r.frequency = static_cast<double>(c.hits) / trials;
  r.bound = std::exp(-delta * delta * r.area * r.area * n / 32.0);
  r.margin = 3.0 * std::sqrt(r.bound * (1.0 - r.bound) / trials);
  r.consistent = r.frequency <= r.bound + r.margin;
  return r;
}

ChiSquareResult chi_square_homogeneity(const std::map<int, std::uint64_t>& a,
                                       const std::map<int, std::uint64_t>& b) {
  std::map<int, std::pair<double, double>> merged;
  for (auto [k, c] : a) merged[k].first += c;
  for (auto [k, c] : b) merged[k].second += c;
  double na = 0, nb = 0;
  for (auto& [k, v] : merged) {
    na += v.first;
    nb += v.second;
  }
  if (na == 0 || nb == 0) throw std::invalid_argument("both samples must be nonempty");
  const double total = na + nb;
  // Pool adjacent bins until each pooled bin expects at least 5 in both rows.
  std::vector<std::pair<double, double>> bins;
  std::pair<double, double> acc{0, 0};
  for (auto& [k, v] : merged) {
    acc.first += v.first;
    acc.second += v.second;
    const double col = acc.first + acc.second;
    if (col * std::min(na, nb) / total >= 5.0) {
      bins.push_back(acc);
      acc = {0, 0};
    }
  }
  if (acc.first + acc.second > 0) {
    if (bins.empty()) {
      bins.push_back(acc);
    } else {
      bins.back().first += acc.first;
      bins.back().second += acc.second;
    }
  }
  ChiSquareResult r;
  r.dof = static_cast<int>(bins.size()) - 1;
  for (auto [x, y] : bins) {
    const double col = x + y;
    const double ex = col * na / total, ey = col * nb / total;
    r.statistic += (x - ex) * (x - ex) / ex + (y - ey) * (y - ey) / ey;
  }
  if (r.dof < 1) {
    r.p_value = 1.0;
    return r;
  }
  const boost::math::chi_squared dist(r.dof);
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

std::pair<std::map<int, std::uint64_t>, std::map<int, std::uint64_t>>
edge_count_histograms(int n, double p, std::uint64_t samples, std::uint64_t seed, int threads) {
  check_p(p);
  struct Hist {
    std::map<int, std::uint64_t> gnp, graphon;
    Hist& operator+=(const Hist& o) {
      for (auto [k, c] : o.gnp) gnp[k] += c;
      for (auto [k, c] : o.graphon) graphon[k] += c;
      return *this;
    }
  };
  const Graphon w = constant_graphon(p);
  // Independent seed families for the two samplers.
  const std::uint64_t seed_w = derive_seed(seed, 0x57ULL << 40);
  const Hist h = run_trials<Hist>(samples, threads, nullptr, [&](std::uint64_t t, Hist& acc) {
    ++acc.gnp[sample_gnp(n, p, derive_seed(seed, t)).edge_count()];
    ++acc.graphon[sample_wgraph(w, n, derive_seed(seed_w, t)).edge_count()];
  });
  return {h.gnp, h.graphon};
}

}  // namespace clawlab

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

#include "clawlab/graphon.hpp"

#include "clawlab/entropy.hpp"
#include "clawlab/random.hpp"

namespace clawlab {

LambdaSeq::LambdaSeq(std::vector<double> lambdas, double tail_mass_sq)
    : lambdas_(std::move(lambdas)), tail_mass_sq_(tail_mass_sq) {
  if (auto why = violation(lambdas_); !why.empty()) throw std::invalid_argument(why);
  if (!(tail_mass_sq_ >= 0.0)) throw std::invalid_argument("tail mass must be nonnegative");
}

std::string LambdaSeq::violation(const std::vector<double>& lambdas) {
  if (lambdas.size() < 2) return "sequence needs at least two entries";
  if (lambdas[0] != 0.0) return "first entry must be 0";
  double previous_gap = 0.0;
  for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) {
    if (!(lambdas[i] < lambdas[i + 1])) return "entries must be strictly increasing";
    if (!(lambdas[i + 1] <= 1.0)) return "entries must not exceed 1";
    const double gap = lambdas[i + 1] - lambdas[i];
    // Relative slack absorbs rounding in gaps that are equal by construction.
    if (i > 0 && gap > previous_gap * (1.0 + 1e-12)) return "gaps must be nonincreasing";
    previous_gap = gap;
  }
  return {};
}

LambdaSeq LambdaSeq::geometric(double first_gap, double ratio, double tolerance) {
  if (!(first_gap > 0.0) || !(ratio > 0.0 && ratio < 1.0) || !(tolerance > 0.0)) {
    throw std::invalid_argument("geometric sequence needs first_gap > 0, ratio in (0,1)");
  }
  if (first_gap / (1.0 - ratio) > 1.0 + 1e-15) {
    throw std::invalid_argument("geometric gaps sum past 1");
  }
  std::vector<double> lambdas{0.0};
  double gap = first_gap;
  auto tail = [&](double g) { return g * g / (1.0 - ratio * ratio); };
  while (tail(gap) >= tolerance) {
    lambdas.push_back(std::min(1.0, lambdas.back() + gap));
    gap *= ratio;
  }
  return LambdaSeq(std::move(lambdas), tail(gap));
}

std::vector<double> LambdaSeq::masses() const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < lambdas_.size(); ++i) {
    out.push_back(lambdas_[i + 1] - lambdas_[i]);
  }
  return out;
}

double LambdaSeq::sum_sq_masses() const {
  double total = 0.0;
  for (double mu : masses()) total += mu * mu;
  return total;
}

Graphon lambda_graphon(const LambdaSeq& lambda) {
  const auto& l = lambda.lambdas();
  const int blocks = static_cast<int>(l.size()) - 1;
  const bool tail = l.back() < 1.0;
  const int k = 2 * blocks + (tail ? 1 : 0);
  Graphon::Vector b(k + 1);
  Graphon::Matrix v = Graphon::Matrix::Zero(k, k);
  const double r = rho();
  for (int i = 0; i < blocks; ++i) {
    b(2 * i) = l[i];
    b(2 * i + 1) = (l[i] + l[i + 1]) / 2.0;
    v(2 * i, 2 * i) = v(2 * i + 1, 2 * i + 1) = 1.0;
    v(2 * i, 2 * i + 1) = v(2 * i + 1, 2 * i) = r;
  }
  b(2 * blocks) = l.back();
  if (tail) b(k) = 1.0;
  return Graphon(b, v);
}

Graphon wstar_graphon(double gamma) {
  if (!(gamma >= gamma_star() && gamma < 1.0)) {
    throw std::domain_error("W*_gamma is defined for gamma in [(5-sqrt5)/4, 1)");
  }
  Graphon::Vector b(3);
  b << 0.0, 0.5, 1.0;
  Graphon::Matrix v(2, 2);
  v << 1.0, 2.0 * gamma - 1.0, 2.0 * gamma - 1.0, 1.0;
  return Graphon(b, v);
}

Graphon constant_graphon(double p) { return Graphon::constant(p); }

Graph sample_wgraph(const Graphon& w, int n, std::uint64_t seed) {
  Graph g(n);
  const CounterRng rng(seed, 0x5752414e444f4dULL);
  std::vector<Eigen::Index> block(n);
  for (int i = 0; i < n; ++i) block[i] = w.block_of(rng.uniform(i));
  std::uint64_t counter = static_cast<std::uint64_t>(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++counter) {
      if (rng.uniform_open_closed(counter) <= w.values()(block[i], block[j])) g.add_edge(i, j);
    }
  }
  return g;
}

nlohmann::json graphon_to_json(const Graphon& w) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < w.blocks(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < w.blocks(); ++j) row.push_back(w.values()(i, j));
    rows.push_back(row);
  }
  std::vector<double> b(w.boundaries().data(), w.boundaries().data() + w.boundaries().size());
  return {{"boundaries", b}, {"values", rows}};
}

Graphon graphon_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("boundaries") || !j.contains("values")) {
    throw std::invalid_argument("graphon JSON needs fields boundaries and values");
  }
  const auto b = j.at("boundaries").get<std::vector<double>>();
  const auto rows = j.at("values").get<std::vector<std::vector<double>>>();
  const Eigen::Index k = static_cast<Eigen::Index>(rows.size());
  Graphon::Matrix v(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != k) {
      throw std::invalid_argument("graphon value matrix must be square");
    }
    for (Eigen::Index c = 0; c < k; ++c) v(i, c) = rows[i][c];
  }
  return Graphon(Eigen::Map<const Graphon::Vector>(b.data(), b.size()), v);
}

}  // namespace clawlab

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

#include "clawlab/variational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clawlab {

namespace {

constexpr int kSeedGrid = 200;

void check_closed_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error(std::string(what) + " must lie in [0, 1]");
}

void check_open_unit(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error(std::string(what) + " must lie in (0, 1)");
}

struct Argmax {
  double arg;
  double value;
};

// Golden-section maximization of a unimodal f on [lo, hi], seeded by a grid.
template <typename F>
Argmax maximize(F f, double lo, double hi, double tol) {
  if (hi <= lo) return {lo, f(lo)};
  int best = 0;
  double best_value = -INFINITY;
  for (int i = 0; i <= kSeedGrid; ++i) {
    const double t = lo + (hi - lo) * i / kSeedGrid;
    const double v = f(t);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double a = lo + (hi - lo) * std::max(0, best - 1) / kSeedGrid;
  double b = lo + (hi - lo) * std::min(kSeedGrid, best + 1) / kSeedGrid;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  Argmax out{(a + b) / 2.0, f((a + b) / 2.0)};
  for (double t : {lo, hi}) {
    if (const double v = f(t); v > out.value) out = {t, v};
  }
  return out;
}

}  // namespace

double r_star(double gamma) {
  check_closed_unit(gamma, "gamma");
  if (gamma < gamma_star()) return kappa() * binary_entropy(rho()) * gamma;
  return 0.5 * binary_entropy(2.0 * gamma - 1.0);
}

double r_lower(double p) {
  check_closed_unit(p, "p");
  if (p < p_star()) return -std::log2(1.0 - p);
  return -0.5 * std::log2(p);
}

KktPoint kkt_optimum(double c) {
  check_open_unit(c, "c");
  KktPoint k;
  k.c = c;
  if (c < gamma_star()) {
    k.x_star = k.y_star = kappa() * c;
  } else {
    k.x_star = k.y_star = 0.5;
  }
  k.f_star = k.y_star * binary_entropy(std::clamp((c - k.x_star) / k.y_star, 0.0, 1.0));
  return k;
}

PhiSolution numeric_phi(double gamma, double tolerance) {
  check_open_unit(gamma, "gamma");
  constexpr double kMinY = 1e-9;
  auto objective = [gamma](double x, double y) {
    return y * binary_entropy(std::clamp((gamma - x) / y, 0.0, 1.0));
  };
  auto inner = [&](double y) {
    const double lo = std::max(y, gamma - y);
    const double hi = std::min(1.0 - y, gamma);
    if (lo > hi) return Argmax{lo, -INFINITY};
    return maximize([&](double x) { return objective(x, y); }, lo, hi, tolerance);
  };
  const double y_hi = std::min(gamma, 0.5);
  const Argmax outer = maximize([&](double y) { return inner(y).value; }, kMinY, y_hi, tolerance);
  PhiSolution out;
  out.y = outer.arg;
  out.x = inner(outer.arg).arg;
  out.value = std::max(0.0, outer.value);
  return out;
}

double psi_objective(double gamma, double p) {
  return r_star(gamma) + gamma * std::log2(p / (1.0 - p)) + std::log2(1.0 - p);
}

PsiSolution numeric_psi(double p, double tolerance) {
  check_open_unit(p, "p");
  const Argmax best = maximize([p](double g) { return psi_objective(g, p); }, 0.0, 1.0, tolerance);
  PsiSolution out;
  out.value = best.value;
  out.argmax = best.arg;
  out.flat = std::abs(kappa() * binary_entropy(rho()) + std::log2(p / (1.0 - p))) < 1e-9;
  return out;
}

VGammaCheck validate_vgamma(const std::vector<double>& lambdas, double gamma) {
  if (!(gamma > 0.0 && gamma <= gamma_star())) {
    return {false, "gamma must lie in (0, (5-sqrt5)/4]"};
  }
  if (auto why = LambdaSeq::violation(lambdas); !why.empty()) return {false, why};
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) {
    const double mu = lambdas[i + 1] - lambdas[i];
    sum += mu * mu;
  }
  const double target = gamma * (1.0 + sqrt5() / 5.0);
  if (std::abs(sum - target) > 1e-10) {
    return {false, "sum of squared gaps " + std::to_string(sum) + " differs from " +
                       std::to_string(target)};
  }
  return {true, {}};
}

XpStar xpstar_representative(double p, std::optional<double> branch_gamma) {
  check_open_unit(p, "p");
  const double formal = (5.0 - sqrt5()) / 8.0;
  const double proof = gamma_star();
  if (std::abs(p - p_star()) <= 1e-12) {
    const double g = branch_gamma.value_or(formal);
    if (!(g > 0.0 && g <= proof)) {
      throw std::domain_error("branch-point density must lie in (0, (5-sqrt5)/4]");
    }
    const double top = std::min(1.0, std::sqrt(g * (1.0 + sqrt5() / 5.0)));
    return {lambda_graphon(LambdaSeq({0.0, top})), true, formal, proof, true};
  }
  if (p < p_star()) return {constant_graphon(0.0), false, formal, proof, true};
  return {wstar_graphon((1.0 + p) / 2.0), false, formal, proof, true};
}

Figure1Data figure1(int points) {
  if (points < 1) throw std::invalid_argument("figure grid needs at least one step");
  Figure1Data out;
  auto fill = [points](std::vector<CurvePoint>& curve, double branch, double (*f)(double)) {
    for (int i = 0; i <= points; ++i) {
      const double x = static_cast<double>(i) / points;
      curve.push_back({x, f(x), false});
    }
    curve.push_back({branch, f(branch), true});
    std::stable_sort(curve.begin(), curve.end(),
                     [](const CurvePoint& a, const CurvePoint& b) { return a.x < b.x; });
  };
  fill(out.entropy_density, gamma_star(), r_star);
  fill(out.rate_function, p_star(), r_lower);
  return out;
}

}  // namespace clawlab

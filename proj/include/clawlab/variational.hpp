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

#ifndef CLAWLAB_VARIATIONAL_HPP_
#define CLAWLAB_VARIATIONAL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "clawlab/entropy.hpp"
#include "clawlab/graphon.hpp"

namespace clawlab {

/// Entropy density of claw-free graphs at edge density gamma in [0, 1].
double r_star(double gamma);

/// Rate function of the claw-free event in G(n, p), p in [0, 1].
double r_lower(double p);

struct KktPoint {
  double c = 0.0;
  double x_star = 0.0;
  double y_star = 0.0;
  double f_star = 0.0;
};

/// Maximizer of y H((c - x)/y) over the feasible region; c in (0, 1).
KktPoint kkt_optimum(double c);

struct PhiSolution {
  double value = 0.0;
  double x = 0.0;
  double y = 0.0;
};

/// Maximizes y H((gamma - x)/y) over 0 < y <= x, x + y <= 1,
/// 0 <= (gamma - x)/y <= 1 by grid seeding and nested golden-section search.
PhiSolution numeric_phi(double gamma, double tolerance = 1e-10);

struct PsiSolution {
  double value = 0.0;
  double argmax = 0.0;
  /// The objective is constant on [0, (5 - sqrt5)/4] (only at the branch point).
  bool flat = false;
};

/// Maximizes r*(gamma) + gamma log2(p/(1-p)) + log2(1-p) over gamma in [0, 1].
PsiSolution numeric_psi(double p, double tolerance = 1e-10);

/// The objective maximized by numeric_psi.
double psi_objective(double gamma, double p);

struct VGammaCheck {
  bool valid = false;
  std::string reason;
};

/// Sequence membership plus sum mu_i^2 = gamma (1 + sqrt5/5) within 1e-10;
/// gamma in (0, (5 - sqrt5)/4].
VGammaCheck validate_vgamma(const std::vector<double>& lambdas, double gamma);

struct XpStar {
  Graphon graphon;
  bool at_branch = false;
  /// Admissible edge densities at the branch point: the formal definition
  /// allows [0, (5 - sqrt5)/8], the optimality argument (0, (5 - sqrt5)/4].
  double formal_upper = 0.0;
  double proof_upper = 0.0;
  bool bounds_disagree = false;
};

/// Zero graphon below p*, W*_{(1+p)/2} above it, and at p* a one-block
/// lambda graphon at branch_gamma (default (5 - sqrt5)/8).
XpStar xpstar_representative(double p, std::optional<double> branch_gamma = std::nullopt);

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
  bool branch_point = false;
};

struct Figure1Data {
  std::vector<CurvePoint> entropy_density;  // (gamma, r*(gamma))
  std::vector<CurvePoint> rate_function;    // (p, r_*(p))
};

/// Samples on the grid i/points, i = 0..points, plus the branch points.
Figure1Data figure1(int points = 200);

}  // namespace clawlab

#endif  // CLAWLAB_VARIATIONAL_HPP_

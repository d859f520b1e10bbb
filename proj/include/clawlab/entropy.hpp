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

#ifndef CLAWLAB_ENTROPY_HPP_
#define CLAWLAB_ENTROPY_HPP_

#include <cmath>

namespace clawlab {

/// Shared constants, all derived from sqrt(5) at runtime.
inline double sqrt5() { return std::sqrt(5.0); }
/// (3 - sqrt5) / 2, the off-diagonal value of the optimal blocks.
inline double rho() { return (3.0 - sqrt5()) / 2.0; }
/// (5 - sqrt5) / 4, branch point of the entropy density.
inline double gamma_star() { return (5.0 - sqrt5()) / 4.0; }
/// (3 - sqrt5) / 2, branch point of the rate function.
inline double p_star() { return (3.0 - sqrt5()) / 2.0; }
/// (5 + sqrt5) / 10, the optimal measure per unit density.
inline double kappa() { return (5.0 + sqrt5()) / 10.0; }

/// H(x) = -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0. Throws
/// std::domain_error outside [0, 1].
double binary_entropy(double x);

/// I_p(x) = x log2(p/x) + (1-x) log2((1-p)/(1-x)); x in [0,1], p in (0,1).
double rel_entropy_scalar(double x, double p);

/// The second algebraic form H(x) + x log2(p/(1-p)) + log2(1-p).
double rel_entropy_scalar_alt(double x, double p);

}  // namespace clawlab

#endif  // CLAWLAB_ENTROPY_HPP_

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

#include "clawlab/entropy.hpp"

#include <stdexcept>

namespace clawlab {

namespace {

double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

void check_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in [0, 1]");
  }
}

void check_open_unit(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("p must lie in (0, 1)");
}

}  // namespace

double binary_entropy(double x) {
  check_unit(x, "entropy argument");
  return -xlog2x(x) - xlog2x(1.0 - x);
}

double rel_entropy_scalar(double x, double p) {
  check_unit(x, "x");
  check_open_unit(p);
  const double left = x == 0.0 ? 0.0 : x * std::log2(p / x);
  const double right = x == 1.0 ? 0.0 : (1.0 - x) * std::log2((1.0 - p) / (1.0 - x));
  return left + right;
}

double rel_entropy_scalar_alt(double x, double p) {
  check_unit(x, "x");
  check_open_unit(p);
  return binary_entropy(x) + x * std::log2(p / (1.0 - p)) + std::log2(1.0 - p);
}

}  // namespace clawlab

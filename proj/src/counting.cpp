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

#include "clawlab/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "clawlab/random.hpp"

namespace clawlab {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

constexpr long long kExactBinomialLimit = 1000;
constexpr double kSeriesCutoff = 1e-15;

double log2_big(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(x);
  if (bits < 1000) return static_cast<double>(log2(Float50(x)));
  const BigInt top = x >> (bits - 60);
  return static_cast<double>(bits - 60) + std::log2(top.convert_to<double>());
}

Rational pow_rational(const Rational& base, long long e) {
  Rational out = 1;
  Rational b = e >= 0 ? base : Rational(1) / base;
  for (long long k = std::llabs(e); k > 0; k >>= 1) {
    if (k & 1) out *= b;
    b *= b;
  }
  return out;
}

Rational binomial_ratio(int a, int b, int c, int d) {
  return Rational(binomial(a, b), binomial(c, d));
}

}  // namespace

double log2_binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return -std::numeric_limits<double>::infinity();
  if (n <= kExactBinomialLimit) return log2_big(binomial(static_cast<int>(n), static_cast<int>(k)));
  return log2_binomial_lgamma(n, k);
}

double log2_binomial_lgamma(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return -std::numeric_limits<double>::infinity();
  const double ln = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
  return ln / std::log(2.0);
}

double bc_series_constant(double gamma, int r, int extra_terms) {
  if (!(gamma > 0.5 && gamma < 1.0)) throw std::domain_error("series needs gamma in (1/2, 1)");
  const double base = 2.0 * gamma - 1.0;
  double sum = (r + 1) / 2.0;
  int extra = -1;
  for (long long k = 1;; ++k) {
    const double term = std::pow(base, static_cast<double>(k * k + r * k));
    sum += term;
    if (extra < 0 && term < kSeriesCutoff) extra = 0;
    if (extra >= 0 && extra++ >= extra_terms) break;
  }
  return sum;
}

AsymptoticTerm bc_asymptotic(int n, long long m) {
  if (n < 2) throw std::domain_error("asymptotic formula needs n >= 2");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  AsymptoticTerm t;
  t.n = n;
  t.m = m;
  t.gamma = static_cast<double>(m) / pairs;
  if (!(t.gamma > 0.5 && t.gamma < 1.0)) {
    throw std::domain_error("asymptotic formula needs m / C(n,2) in (1/2, 1)");
  }
  t.r = n % 2;
  const double base = 2.0 * t.gamma - 1.0;
  t.series = (t.r + 1) / 2.0;
  for (long long k = 1;; ++k) {
    const double term = std::pow(base, static_cast<double>(k * k + t.r * k));
    t.series += term;
    ++t.series_terms;
    if (term < kSeriesCutoff) break;
  }
  const long long lo = n / 2, hi = n - n / 2;
  const long long cross = static_cast<long long>(n) * n / 4;
  const long long extra = m - lo * (lo - 1) / 2 - hi * (hi - 1) / 2;
  if (extra < 0 || extra > cross) {
    throw std::domain_error("edge count falls outside the two-clique range");
  }
  t.log2_vertex_binomial = log2_binomial(n, lo);
  t.log2_edge_binomial = log2_binomial(cross, extra);
  t.log2_total = std::log2(t.series) + t.log2_vertex_binomial + t.log2_edge_binomial;
  return t;
}

BcComparison compare_bc(int n, int m) {
  const auto exact = cobipartite_table(n).at(m);
  const auto asym = bc_asymptotic(n, m);
  BcComparison c;
  c.n = n;
  c.m = m;
  c.gamma = asym.gamma;
  c.log2_exact = log2_big(exact);
  c.log2_asymptotic = asym.log2_total;
  c.ratio = std::exp2(c.log2_exact - c.log2_asymptotic);
  c.log2_lower_bound = asym.log2_edge_binomial;
  return c;
}

InequalityReport binomial_inequality_suite(std::uint64_t tuples_per_item, std::uint64_t seed,
                                           int max_n) {
  if (max_n < 2) throw std::invalid_argument("inequality suite needs max_n >= 2");
  InequalityReport rep;
  const CounterRng rng(seed, 0x41314cULL);
  std::uint64_t counter = 0;
  auto uniform_int = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1), counter));
  };
  const Float50 slack("1e-40");

  // First item and its negative-j companion.
  for (std::uint64_t t = 0; t < tuples_per_item; ++t) {
    const int n = static_cast<int>(uniform_int(1, max_n));
    const int m = static_cast<int>(uniform_int(1, n));
    for (bool negative : {false, true}) {
      const int j = negative ? static_cast<int>(uniform_int(-m, -1)) : static_cast<int>(uniform_int(0, m));
      const Rational lhs = binomial_ratio(n - j, m - j, n, m);
      const Float50 rhs = exp(-(Float50(1) - Float50(m) / n) * j);
      const bool ok = Float50(lhs) <= rhs * (1 + slack);
      InequalityItem& item = negative ? rep.first_negative_j : rep.first;
      ++item.tuples;
      item.violations += !ok;
    }
  }
  // Second item: the ratio link on its full domain, the exponential link at
  // j >= 0 (asserted) and j < 0 (counted).
  for (std::uint64_t t = 0; t < tuples_per_item; ++t) {
    const int n = static_cast<int>(uniform_int(2, max_n));
    const int m = static_cast<int>(uniform_int(1, n - 1));
    const int j = static_cast<int>(uniform_int(-m, n - m));
    if (m > n - std::max(1, j)) {
      --t;
      continue;
    }
    const Rational base(n - m, m);
    const Rational lhs = binomial_ratio(n, m + j, n, m);
    const Rational mid = pow_rational(base, j);
    ++rep.second_ratio.tuples;
    rep.second_ratio.violations += !(lhs <= mid);
    const Float50 rhs = exp(-(Float50(1) - Float50(base)) * j);
    const bool ok = Float50(mid) <= rhs * (1 + slack);
    InequalityItem& item = j >= 0 ? rep.second_exponential : rep.second_exponential_negative_j;
    ++item.tuples;
    item.violations += !ok;
  }
  // Third item.
  for (std::uint64_t t = 0; t < tuples_per_item; ++t) {
    const int n = static_cast<int>(uniform_int(1, max_n));
    const int m = static_cast<int>(uniform_int(1, n));
    const int j = static_cast<int>(uniform_int(0, n - m));
    const int k = static_cast<int>(uniform_int(0, n - m - j));
    const Rational lhs = binomial_ratio(n - j, m + k, n, m);
    const Rational rhs = pow_rational(Rational(n - m, n), j) * pow_rational(Rational(n - m, m), k);
    ++rep.third.tuples;
    rep.third.violations += !(lhs <= rhs);
  }
  return rep;
}

HypergeomRatio hypergeom_binomial_ratio(int n, int m, int k, int l) {
  if (n < 1 || k < 0 || l < 0 || k > n || l > m || m > n + std::min(0, k - l)) {
    throw std::domain_error("need k <= n and l <= m <= n + min(0, k - l)");
  }
  HypergeomRatio r;
  r.exact = static_cast<double>(binomial_ratio(n - k, m - l, n, m));
  const Rational q(m, n);
  r.limit = static_cast<double>(pow_rational(q, l) * pow_rational(Rational(1) - q, k - l));
  r.relative_gap = r.limit == 0.0 ? 0.0 : std::abs(r.exact / r.limit - 1.0);
  return r;
}

}  // namespace clawlab

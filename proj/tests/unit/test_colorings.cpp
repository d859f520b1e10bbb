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

#include <map>
#include <vector>

#include "clawlab/colorings.hpp"
#include "clawlab/random.hpp"
#include "doctest.h"

using namespace clawlab;

namespace {

using Histogram = std::map<int, std::uint64_t>;

std::map<int, std::pair<std::uint64_t, int>> flatten(const std::map<int, StabilityBucket>& p) {
  std::map<int, std::pair<std::uint64_t, int>> out;
  for (const auto& [k, b] : p) out[k] = {b.count, b.max_distance};
  return out;
}

}  // namespace

TEST_SUITE("colorings") {

TEST_CASE("edge coloring encoding") {
  EdgeColoring phi(4);
  CHECK(phi.count(Color::kGreen) == 6);
  phi.set(2, 3, Color::kRed);
  phi.set(0, 1, Color::kBlue);
  CHECK(phi.color(3, 2) == Color::kRed);
  CHECK(phi.edge_index(0, 1) == 0);
  CHECK(phi.edge_index(2, 3) == 5);
  CHECK(EdgeColoring::from_code(4, phi.code()) == phi);
  CHECK(phi.code() == 2 + 1 * 3 + 1 * 9 + 1 * 27 + 1 * 81 + 0);
  const CounterRng rng(51, 1);
  std::uint64_t counter = 0;
  for (int t = 0; t < 200; ++t) {
    EdgeColoring c(9);
    for (int k = 0; k < c.edge_count(); ++k) c.set_at(k, static_cast<Color>(rng.below(3, counter)));
    CHECK(EdgeColoring::from_code(9, c.code()) == c);
  }
  CHECK_THROWS_AS(EdgeColoring::from_code(10, 0), std::out_of_range);
  CHECK_THROWS(phi.set(1, 1, Color::kRed));
}

TEST_CASE("forbidden triangles") {
  EdgeColoring phi(3);
  CHECK(is_valid(phi));
  phi.set(0, 1, Color::kRed);
  phi.set(0, 2, Color::kRed);
  CHECK_FALSE(is_valid(phi));
  phi.set(1, 2, Color::kRed);
  CHECK_FALSE(is_valid(phi));
  phi.set(1, 2, Color::kBlue);
  CHECK(is_valid(phi));
}

TEST_CASE("bound verification, small cases") {
  const auto two = verify_bound(2);
  CHECK(two.valid_count == 3);
  CHECK(two.violations == 0);
  CHECK(two.equality_count == 1);
  CHECK(two.equality_matches_e);
  CHECK(extremal_e_codes(2) == std::vector<std::uint64_t>{0});

  const auto three = verify_bound(3);
  CHECK(three.valid_count == 23);
  CHECK(three.violations == 0);
  CHECK(three.equality_count == 6);
  CHECK(three.equality_matches_e);
  CHECK(three.excess_histogram == Histogram{{-3, 1}, {-2, 3}, {-1, 6}, {0, 7}, {1, 6}});
}

TEST_CASE("bound verification at n = 4 and 5") {
  const auto four = verify_bound(4);
  CHECK(four.valid_count == 431);
  CHECK(four.violations == 0);
  CHECK(four.equality_count == 6);
  CHECK(four.equality_matches_e);
  CHECK(four.excess_histogram ==
        Histogram{{-6, 1}, {-5, 6}, {-4, 21}, {-3, 50}, {-2, 90}, {-1, 114}, {0, 101}, {1, 42}, {2, 6}});
  const auto five = verify_bound(5);
  CHECK(five.valid_count == 19091);
  CHECK(five.violations == 0);
  CHECK(five.equality_count == 70);
  CHECK(five.equality_matches_e);
  CHECK(five.excess_histogram == Histogram{{-10, 1},   {-9, 10},   {-8, 55},   {-7, 210},  {-6, 615},
                                           {-5, 1422}, {-4, 2630}, {-3, 3830}, {-2, 4295}, {-1, 3480},
                                           {0, 1893},  {1, 580},   {2, 70}});
}

TEST_CASE("verification is independent of the thread count") {
  const auto one = verify_bound(5, 1);
  const auto many = verify_bound(5, 4);
  CHECK(one.valid_count == many.valid_count);
  CHECK(one.excess_histogram == many.excess_histogram);
  CHECK(one.equality_count == many.equality_count);
}

TEST_CASE("extremal family sizes") {
  const std::vector<std::size_t> e = {1, 6, 6, 70, 70};
  const std::vector<std::size_t> f = {2, 7, 25, 111, 476};
  for (int n = 2; n <= 6; ++n) {
    CHECK(extremal_e_codes(n).size() == e[n - 2]);
    CHECK(extremal_f_codes(n).size() == f[n - 2]);
  }
}

TEST_CASE("degree identity on E(n) for even n") {
  for (int n : {2, 4, 6, 8}) {
    for (const auto& phi : generate_extremal_e(n)) {
      for (int u = 0; u < n; ++u) {
        int red = 0, blue = 0;
        for (int v = 0; v < n; ++v) {
          if (v == u) continue;
          red += phi.color(u, v) == Color::kRed;
          blue += phi.color(u, v) == Color::kBlue;
        }
        if (red != blue + 1) FAIL("degree identity fails at n = " << n);
      }
      CHECK(phi.count(Color::kRed) - phi.count(Color::kBlue) == n / 2);
    }
  }
}

TEST_CASE("F(n) members are valid colorings") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& phi : generate_extremal_f(n)) {
      if (!is_valid(phi)) FAIL("invalid member of F(" << n << ")");
    }
    for (const auto& phi : generate_extremal_e(n)) {
      if (!is_valid(phi)) FAIL("invalid member of E(" << n << ")");
    }
  }
}

TEST_CASE("distance to the extremal family") {
  for (const auto& phi : generate_extremal_f(5)) CHECK(hamming_to_extremal(phi) == 0);
  EdgeColoring k4(4);
  for (int k = 0; k < 6; ++k) k4.set_at(k, Color::kBlue);
  CHECK(hamming_to_extremal(k4) > 0);
  CHECK(hamming_distance(k4, EdgeColoring(4)) == 6);
  CHECK_THROWS_AS(hamming_to_extremal(EdgeColoring(7)), std::out_of_range);
}

TEST_CASE("stability profiles") {
  const std::map<int, std::pair<std::uint64_t, int>> four = {
      {-6, {1, 4}}, {-5, {6, 4}}, {-4, {21, 4}}, {-3, {50, 3}}, {-2, {90, 3}},
      {-1, {114, 2}}, {0, {101, 3}}, {1, {42, 1}}, {2, {6, 0}}};
  CHECK(flatten(stability_profile(4)) == four);
  const std::map<int, std::pair<std::uint64_t, int>> five = {
      {-10, {1, 6}},   {-9, {10, 6}},   {-8, {55, 6}},   {-7, {210, 6}},  {-6, {615, 6}},
      {-5, {1422, 5}}, {-4, {2630, 5}}, {-3, {3830, 4}}, {-2, {4295, 4}}, {-1, {3480, 4}},
      {0, {1893, 3}},  {1, {580, 3}},   {2, {70, 0}}};
  CHECK(flatten(stability_profile(5)) == five);
}

TEST_CASE("stability scan") {
  const auto tight = stability_scan(5, 0.0);
  CHECK(tight.admitted == 70);
  CHECK(tight.max_distance == 0);
  const auto loose = stability_scan(5, 0.05);
  CHECK(loose.admitted == 70 + 580);
  CHECK(loose.max_distance == 3);
  CHECK(loose.max_normalized == doctest::Approx(3.0 / 25.0));
  CHECK_THROWS(stability_scan(5, -1.0));
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(verify_bound(7), std::out_of_range);
  CHECK_THROWS_AS(extremal_e_codes(9), std::out_of_range);
}

TEST_CASE("bound verification at n = 6") {
  const auto six = verify_bound(6);
  MESSAGE("n = 6: valid " << six.valid_count << ", equality " << six.equality_count
                           << ", equality set equals E(6): " << six.equality_matches_e);
  CHECK(six.violations == 0);
  CHECK(six.valid_count == 1955943);
  CHECK(six.equality_count == 70);
  CHECK(six.equality_matches_e);
}

}  // TEST_SUITE

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

#include "clawlab/colorings.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace clawlab {

EdgeColoring::EdgeColoring(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("coloring order must be in [1, 64]");
  words_.assign((edge_count() + 31) / 32, 0);
  for (int k = 0; k < edge_count(); ++k) set_at(k, Color::kGreen);
}

int EdgeColoring::edge_index(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("edge endpoints out of range");
  }
  if (u > v) std::swap(u, v);
  return u * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

void EdgeColoring::set_at(int index, Color c) {
  const int shift = 2 * (index % 32);
  std::uint64_t& w = words_[index / 32];
  w = (w & ~(std::uint64_t{3} << shift)) | (static_cast<std::uint64_t>(c) << shift);
}

int EdgeColoring::count(Color c) const {
  int total = 0;
  for (int k = 0; k < edge_count(); ++k) total += color_at(k) == c;
  return total;
}

std::uint64_t EdgeColoring::code() const {
  if (n_ > kMaxCodeOrder) throw std::out_of_range("base-3 codes need n <= 9");
  std::uint64_t out = 0;
  for (int k = edge_count() - 1; k >= 0; --k) out = out * 3 + static_cast<std::uint64_t>(color_at(k));
  return out;
}

EdgeColoring EdgeColoring::from_code(int n, std::uint64_t code) {
  if (n > kMaxCodeOrder) throw std::out_of_range("base-3 codes need n <= 9");
  EdgeColoring phi(n);
  for (int k = 0; k < phi.edge_count(); ++k) {
    phi.set_at(k, static_cast<Color>(code % 3));
    code /= 3;
  }
  if (code != 0) throw std::invalid_argument("code exceeds 3^C(n,2)");
  return phi;
}

namespace {

bool forbidden(Color a, Color b, Color c) {
  const int red = (a == Color::kRed) + (b == Color::kRed) + (c == Color::kRed);
  const int green = (a == Color::kGreen) + (b == Color::kGreen) + (c == Color::kGreen);
  return red == 3 || (red == 2 && green == 1);
}

using Digits = std::vector<std::uint8_t>;

int lex_index(int n, int u, int v) { return u * (2 * n - u - 1) / 2 + (v - u - 1); }

std::uint64_t digits_code(const Digits& d) {
  std::uint64_t out = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) out = out * 3 + *it;
  return out;
}

// Depth-first scan of valid colorings in colex edge order: the third edge of
// each triangle is checked as soon as it is colored. The first pairs are
// fixed per task. leaf(task, digits, reds, blues).
void scan_valid(int n, int threads, const CancellationToken* token,
                const std::function<void(std::size_t, const Digits&, int, int)>& leaf,
                std::size_t* task_count) {
  std::vector<std::pair<int, int>> order;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) order.emplace_back(i, j);
  }
  const int total = static_cast<int>(order.size());
  const int fixed = std::min(5, total);
  std::size_t tasks = 1;
  for (int k = 0; k < fixed; ++k) tasks *= 3;
  if (task_count != nullptr) *task_count = tasks;

  parallel_for_index(tasks, threads, token, [&](std::size_t task) {
    Digits digits(total, 1);
    std::uint64_t nodes = 0;
    auto ok = [&](int k) {
      auto [i, j] = order[k];
      const auto c = static_cast<Color>(digits[lex_index(n, i, j)]);
      for (int m = 0; m < i; ++m) {
        if (forbidden(static_cast<Color>(digits[lex_index(n, m, i)]),
                      static_cast<Color>(digits[lex_index(n, m, j)]), c)) {
          return false;
        }
      }
      return true;
    };
    std::function<void(int, int, int)> dfs = [&](int k, int reds, int blues) {
      if (k == total) {
        leaf(task, digits, reds, blues);
        return;
      }
      if ((++nodes & 0xFFFF) == 0 && token != nullptr) token->throw_if_cancelled();
      const int idx = lex_index(n, order[k].first, order[k].second);
      for (std::uint8_t c = 0; c < 3; ++c) {
        digits[idx] = c;
        if (ok(k)) dfs(k + 1, reds + (c == 0), blues + (c == 2));
      }
      digits[idx] = 1;
    };
    std::size_t rest = task;
    int reds = 0, blues = 0;
    for (int k = 0; k < fixed; ++k) {
      const auto c = static_cast<std::uint8_t>(rest % 3);
      rest /= 3;
      digits[lex_index(n, order[k].first, order[k].second)] = c;
      if (!ok(k)) return;
      reds += c == 0;
      blues += c == 2;
    }
    dfs(fixed, reds, blues);
  });
}

void check_cap(int n, int cap, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be positive");
  if (n > cap) {
    throw std::out_of_range(std::string(what) + ": n must be at most " + std::to_string(cap));
  }
}

// All set partitions of {0..n-1} as block-label vectors in restricted growth form.
void set_partitions(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> label(n, 0);
  std::function<void(int, int)> rec = [&](int v, int blocks) {
    if (v == n) {
      visit(label, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[v] = b;
      rec(v + 1, std::max(blocks, b + 1));
    }
  };
  if (n > 0) rec(1, 1);
}

}  // namespace

bool is_valid(const EdgeColoring& phi) {
  const int n = phi.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (forbidden(phi.color(a, b), phi.color(a, c), phi.color(b, c))) return false;
      }
    }
  }
  return true;
}

int hamming_distance(const EdgeColoring& a, const EdgeColoring& b) {
  if (a.order() != b.order()) throw std::invalid_argument("colorings of different orders");
  int d = 0;
  for (int k = 0; k < a.edge_count(); ++k) d += a.color_at(k) != b.color_at(k);
  return d;
}

std::vector<std::uint64_t> extremal_e_codes(int n) {
  check_cap(n, kMaxExtremalOrder, "extremal family E(n)");
  std::set<std::uint64_t> codes;
  set_partitions(n, [&](const std::vector<int>& label, int blocks) {
    std::vector<std::vector<int>> parts(blocks);
    for (int v = 0; v < n; ++v) parts[label[v]].push_back(v);
    int odd = 0;
    for (const auto& p : parts) odd += p.size() % 2;
    if (odd != n % 2) return;
    // Choose a balanced split of every part; side[v] in {0, 1}.
    std::vector<int> side(n, 0);
    std::function<void(int)> split = [&](int b) {
      if (b == blocks) {
        EdgeColoring phi(n);
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) {
            if (label[u] != label[v]) continue;
            phi.set(u, v, side[u] == side[v] ? Color::kBlue : Color::kRed);
          }
        }
        codes.insert(phi.code());
        return;
      }
      const auto& part = parts[b];
      const int s = static_cast<int>(part.size());
      for (std::uint32_t mask = 0; mask < (1U << s); ++mask) {
        const int x = std::popcount(mask);
        if (std::abs(2 * x - s) > 1) continue;
        for (int i = 0; i < s; ++i) side[part[i]] = (mask >> i) & 1U;
        split(b + 1);
      }
    };
    split(0);
  });
  return {codes.begin(), codes.end()};
}

std::vector<std::uint64_t> extremal_f_codes(int n) {
  check_cap(n, kMaxExtremalOrder, "extremal family F(n)");
  std::set<std::uint64_t> codes;
  std::vector<std::vector<std::uint64_t>> e_by_size(n + 1);
  for (int k = 1; k <= n; ++k) e_by_size[k] = extremal_e_codes(k);
  // E(k) is closed under relabeling, so order-preserving embeddings of every
  // k-subset reach all injections.
  for (std::uint32_t subset = 1; subset < (1U << n); ++subset) {
    std::vector<int> image;
    for (int v = 0; v < n; ++v) {
      if ((subset >> v) & 1U) image.push_back(v);
    }
    const int k = static_cast<int>(image.size());
    for (std::uint64_t code : e_by_size[k]) {
      const EdgeColoring small = EdgeColoring::from_code(k, code);
      EdgeColoring phi(n);
      for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) phi.set(image[a], image[b], small.color(a, b));
      }
      codes.insert(phi.code());
    }
  }
  return {codes.begin(), codes.end()};
}

std::vector<EdgeColoring> generate_extremal_e(int n) {
  std::vector<EdgeColoring> out;
  for (auto c : extremal_e_codes(n)) out.push_back(EdgeColoring::from_code(n, c));
  return out;
}

std::vector<EdgeColoring> generate_extremal_f(int n) {
  std::vector<EdgeColoring> out;
  for (auto c : extremal_f_codes(n)) out.push_back(EdgeColoring::from_code(n, c));
  return out;
}

BoundReport verify_bound(int n, int threads, const CancellationToken* token) {
  check_cap(n, kMaxBoundScanOrder, "bound verification");
  const int bound = n / 2;
  struct Local {
    std::uint64_t valid = 0, violations = 0;
    std::vector<std::uint64_t> equality;
    std::map<int, std::uint64_t> excess;
  };
  std::vector<Local> locals(729);
  std::size_t tasks = 0;
  scan_valid(n, threads, token,
             [&](std::size_t task, const Digits& d, int reds, int blues) {
               Local& l = locals[task];
               ++l.valid;
               const int excess = reds - blues;
               ++l.excess[excess];
               if (excess > bound) ++l.violations;
               if (excess == bound) l.equality.push_back(digits_code(d));
             },
             &tasks);
  BoundReport report;
  report.n = n;
  std::vector<std::uint64_t> equality;
  for (const auto& l : locals) {
    report.valid_count += l.valid;
    report.violations += l.violations;
    for (auto [k, c] : l.excess) report.excess_histogram[k] += c;
    equality.insert(equality.end(), l.equality.begin(), l.equality.end());
  }
  std::sort(equality.begin(), equality.end());
  report.equality_count = equality.size();
  report.equality_matches_e = equality == extremal_e_codes(n);
  return report;
}

namespace {

std::vector<Digits> f_digits(int n) {
  std::vector<Digits> out;
  const int total = n * (n - 1) / 2;
  for (std::uint64_t code : extremal_f_codes(n)) {
    Digits d(total);
    for (int k = 0; k < total; ++k) {
      d[k] = static_cast<std::uint8_t>(code % 3);
      code /= 3;
    }
    out.push_back(std::move(d));
  }
  return out;
}

int distance_to(const std::vector<Digits>& family, const Digits& d) {
  int best = std::numeric_limits<int>::max();
  for (const auto& f : family) {
    int dist = 0;
    for (std::size_t k = 0; k < d.size() && dist < best; ++k) dist += f[k] != d[k];
    best = std::min(best, dist);
  }
  return best;
}

}  // namespace

int hamming_to_extremal(const EdgeColoring& phi) {
  check_cap(phi.order(), kMaxStabilityOrder, "distance to F(n)");
  const auto family = f_digits(phi.order());
  Digits d(phi.edge_count());
  for (int k = 0; k < phi.edge_count(); ++k) d[k] = static_cast<std::uint8_t>(phi.color_at(k));
  return distance_to(family, d);
}

std::map<int, StabilityBucket> stability_profile(int n, int threads) {
  check_cap(n, kMaxStabilityOrder, "stability profile");
  const auto family = f_digits(n);
  std::vector<std::map<int, StabilityBucket>> locals(729);
  scan_valid(n, threads, nullptr,
             [&](std::size_t task, const Digits& d, int reds, int blues) {
               auto& bucket = locals[task][reds - blues];
               ++bucket.count;
               bucket.max_distance = std::max(bucket.max_distance, distance_to(family, d));
             },
             nullptr);
  std::map<int, StabilityBucket> out;
  for (const auto& l : locals) {
    for (const auto& [k, b] : l) {
      out[k].count += b.count;
      out[k].max_distance = std::max(out[k].max_distance, b.max_distance);
    }
  }
  return out;
}

StabilityReport stability_scan(int n, double delta, int threads) {
  check_cap(n, 5, "stability scan");
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
  const auto family = f_digits(n);
  const double threshold = n / 2 - delta * n * n;
  std::vector<std::map<int, std::uint64_t>> locals(729);
  scan_valid(n, threads, nullptr,
             [&](std::size_t task, const Digits& d, int reds, int blues) {
               if (reds - blues < threshold) return;
               ++locals[task][distance_to(family, d)];
             },
             nullptr);
  StabilityReport report;
  report.n = n;
  report.delta = delta;
  for (const auto& l : locals) {
    for (auto [dist, c] : l) report.distance_histogram[dist] += c;
  }
  for (auto [dist, c] : report.distance_histogram) {
    report.admitted += c;
    report.max_distance = std::max(report.max_distance, dist);
  }
  report.max_normalized = static_cast<double>(report.max_distance) / (n * n);
  return report;
}

}  // namespace clawlab

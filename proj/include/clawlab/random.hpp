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

#ifndef CLAWLAB_RANDOM_HPP_
#define CLAWLAB_RANDOM_HPP_

#include <cstdint>

namespace clawlab {

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so results never depend on evaluation order or on
// how work is split across threads.
class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
    return mix(key_ + mix(counter ^ 0xd1b54a32d192ed03ULL));
  }

  // Uniform on [0, 1).
  constexpr double uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1].
  constexpr double uniform_open_closed(std::uint64_t counter) const noexcept {
    return static_cast<double>((bits(counter) >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) by rejection; `counter` advances past
  // rejected draws.
  std::uint64_t below(std::uint64_t bound, std::uint64_t& counter) const noexcept {
    const std::uint64_t limit = (~std::uint64_t{0} / bound) * bound;
    for (;;) {
      const std::uint64_t x = bits(counter++);
      if (x < limit) return x % bound;
    }
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t key_;
};

// Seed for an independent sub-experiment, e.g. one Monte Carlo trial.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return CounterRng::mix(seed + CounterRng::mix(index + 0x632be59bd9b4e019ULL));
}

}  // namespace clawlab

#endif  // CLAWLAB_RANDOM_HPP_

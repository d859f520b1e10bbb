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

#ifndef CLAWLAB_CACHE_HPP_
#define CLAWLAB_CACHE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clawlab/enumerate.hpp"

namespace clawlab {

inline constexpr int kCacheVersion = 1;

/// $CLAWLAB_CACHE if set, else $HOME/.cache/clawlab.
std::filesystem::path cache_directory();

std::uint64_t fnv1a64(std::string_view bytes);

/// Returns nullopt when the file is missing, stale or fails its checksum.
std::optional<std::vector<BigInt>> load_count_table(const std::filesystem::path& dir,
                                                    const std::string& kind, int n);
void save_count_table(const std::filesystem::path& dir, const std::string& kind, int n,
                      const std::string& method, const std::vector<BigInt>& table);

}  // namespace clawlab

#endif  // CLAWLAB_CACHE_HPP_

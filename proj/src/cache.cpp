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

#include "clawlab/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace clawlab {

namespace {

std::filesystem::path table_path(const std::filesystem::path& dir, const std::string& kind,
                                 int n) {
  return dir / (kind + "_n" + std::to_string(n) + ".json");
}

std::string checksum_payload(int n, const std::string& method,
                             const std::vector<std::string>& counts) {
  std::ostringstream out;
  out << kCacheVersion << '|' << n << '|' << method;
  for (const auto& c : counts) out << '|' << c;
  return out.str();
}

}  // namespace

std::filesystem::path cache_directory() {
  if (const char* env = std::getenv("CLAWLAB_CACHE"); env != nullptr && *env != '\0') {
    return env;
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "clawlab";
  }
  return std::filesystem::temp_directory_path() / "clawlab";
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::optional<std::vector<BigInt>> load_count_table(const std::filesystem::path& dir,
                                                    const std::string& kind, int n) {
  std::ifstream in(table_path(dir, kind, n));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("version").get<int>() != kCacheVersion || j.at("n").get<int>() != n) {
      return std::nullopt;
    }
    const auto counts = j.at("counts").get<std::vector<std::string>>();
    const auto method = j.at("method").get<std::string>();
    std::ostringstream hex;
    hex << std::hex << fnv1a64(checksum_payload(n, method, counts));
    if (j.at("checksum").get<std::string>() != hex.str()) return std::nullopt;
    if (static_cast<int>(counts.size()) != pair_count(n) + 1) return std::nullopt;
    std::vector<BigInt> table;
    for (const auto& c : counts) table.emplace_back(c);
    return table;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void save_count_table(const std::filesystem::path& dir, const std::string& kind, int n,
                      const std::string& method, const std::vector<BigInt>& table) {
  std::vector<std::string> counts;
  for (const auto& c : table) counts.push_back(c.str());
  std::ostringstream hex;
  hex << std::hex << fnv1a64(checksum_payload(n, method, counts));
  nlohmann::json j = {{"version", kCacheVersion}, {"n", n},          {"method", method},
                      {"counts", counts},         {"checksum", hex.str()}};
  std::filesystem::create_directories(dir);
  const auto path = table_path(dir, kind, n);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace clawlab

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

#ifndef CLAWLAB_TOOLS_CLI_HPP_
#define CLAWLAB_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace clawlab::cli {

inline constexpr int kSchemaVersion = 1;

/// Exit codes: 0 success, 1 computation error (domain, cap, cancellation),
/// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Empty when j has the CommandOutput shape: command (string), params
/// (object), result (object), runtime_s (number), seed (unsigned), version
/// (string), schema_version (integer).
std::vector<std::string> schema_errors(const nlohmann::json& j);

/// CSV rendering of a result payload: scalar fields as key,value lines and
/// each array of objects as its own "# name" block with a header row.
std::string to_csv(const nlohmann::json& result);

}  // namespace clawlab::cli

#endif  // CLAWLAB_TOOLS_CLI_HPP_

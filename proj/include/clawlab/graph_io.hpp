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

#ifndef CLAWLAB_GRAPH_IO_HPP_
#define CLAWLAB_GRAPH_IO_HPP_

#include <string>

#include "clawlab/graph.hpp"
#include "json.hpp"

namespace clawlab {

std::string to_graph6(const Graph& g);
/// Throws std::invalid_argument on malformed input.
Graph from_graph6(const std::string& text);

/// {"n": n, "edges": [[i, j], ...]}, 0-indexed, i < j.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace clawlab

#endif  // CLAWLAB_GRAPH_IO_HPP_

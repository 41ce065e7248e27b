// Copyright 2026 The critloc Authors
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

// Internal adjacency-list algorithms shared by the graph and matrix code.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "critloc/graph.hpp"

namespace critloc::detail {

using Successors = std::vector<std::vector<NodeIndex>>;

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

/// Strongly connected components. Components are ordered by their smallest
/// member and members are sorted ascending.
std::vector<std::vector<NodeIndex>> strongly_connected_components(
    const Successors& successors);

/// Hop counts from `source`; kUnreachable where no path exists.
std::vector<std::size_t> bfs_distances(const Successors& successors,
                                       NodeIndex source);

/// Shortest cycle through `node` as [node, ..., last] (last -> node closes
/// it), or nullopt when `node` is on no cycle.
std::optional<std::vector<NodeIndex>> shortest_cycle_through(
    const Successors& successors, NodeIndex node);

/// Kahn order, smallest ready index first; nullopt if cyclic.
std::optional<std::vector<NodeIndex>> topological_order(
    const Successors& successors);

}  // namespace critloc::detail

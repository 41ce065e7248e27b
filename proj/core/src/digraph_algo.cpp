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

#include "digraph_algo.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>

namespace critloc::detail {

std::vector<std::vector<NodeIndex>> strongly_connected_components(
    const Successors& successors) {
  // Iterative Tarjan.
  const std::size_t n = successors.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeIndex> stack;
  std::vector<std::vector<NodeIndex>> components;
  std::size_t counter = 0;

  struct Frame {
    NodeIndex node;
    std::size_t next_child;
  };
  std::vector<Frame> call_stack;

  for (NodeIndex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call_stack.push_back({root, 0});
    index[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const NodeIndex v = frame.node;
      if (frame.next_child < successors[v].size()) {
        const NodeIndex w = successors[v][frame.next_child++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      if (lowlink[v] == index[v]) {
        std::vector<NodeIndex> component;
        NodeIndex w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const NodeIndex parent = call_stack.back().node;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }

  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

std::vector<std::size_t> bfs_distances(const Successors& successors,
                                       NodeIndex source) {
  std::vector<std::size_t> dist(successors.size(), kUnreachable);
  std::deque<NodeIndex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeIndex u = queue.front();
    queue.pop_front();
    for (NodeIndex w : successors[u]) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::vector<NodeIndex>> shortest_cycle_through(
    const Successors& successors, NodeIndex node) {
  constexpr NodeIndex kNone = static_cast<NodeIndex>(-1);
  std::vector<NodeIndex> parent(successors.size(), kNone);
  std::vector<bool> seen(successors.size(), false);
  std::deque<NodeIndex> queue{node};
  seen[node] = true;
  while (!queue.empty()) {
    const NodeIndex u = queue.front();
    queue.pop_front();
    for (NodeIndex w : successors[u]) {
      if (w == node) {
        std::vector<NodeIndex> cycle;
        for (NodeIndex x = u; x != kNone; x = parent[x]) cycle.push_back(x);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<NodeIndex>> topological_order(
    const Successors& successors) {
  const std::size_t n = successors.size();
  std::vector<std::size_t> in_degree(n, 0);
  for (const auto& out : successors)
    for (NodeIndex w : out) ++in_degree[w];

  std::priority_queue<NodeIndex, std::vector<NodeIndex>, std::greater<>> ready;
  for (NodeIndex v = 0; v < n; ++v)
    if (in_degree[v] == 0) ready.push(v);

  std::vector<NodeIndex> order;
  order.reserve(n);
  while (!ready.empty()) {
    const NodeIndex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (NodeIndex w : successors[v])
      if (--in_degree[w] == 0) ready.push(w);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

}  // namespace critloc::detail

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

#include "critloc/matrix.hpp"

#include <algorithm>
#include <bit>

#include "critloc/error.hpp"
#include "digraph_algo.hpp"

namespace critloc {

namespace {

void check_capacity(std::size_t nodes) {
  if (nodes > kMaxMatrixNodes) {
    throw Error(ErrorCode::CapacityExceeded,
                std::to_string(nodes) + " nodes exceeds the dense matrix limit of " +
                    std::to_string(kMaxMatrixNodes));
  }
}

std::vector<std::string> node_labels(const ActivityGraph& graph) {
  std::vector<std::string> labels;
  labels.reserve(graph.node_count());
  for (const Activity& a : graph.activities()) labels.push_back(a.id);
  return labels;
}

}  // namespace

DependencyMatrix::DependencyMatrix(std::vector<std::string> labels, bool closed)
    : labels_(std::move(labels)),
      words_per_row_((labels_.size() + 63) / 64),
      bits_(labels_.size() * words_per_row_, 0),
      closed_(closed) {
  check_capacity(labels_.size());
}

void DependencyMatrix::set(std::size_t row, std::size_t col, bool value) {
  std::uint64_t& word = row_words(row)[col / 64];
  const std::uint64_t mask = std::uint64_t{1} << (col % 64);
  word = value ? (word | mask) : (word & ~mask);
}

std::vector<NodeIndex> DependencyMatrix::row_support(std::size_t row) const {
  std::vector<NodeIndex> cols;
  const auto words = row_words(row);
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1) {
      cols.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return cols;
}

std::size_t DependencyMatrix::count() const {
  std::size_t total = 0;
  for (std::uint64_t word : bits_) total += std::popcount(word);
  return total;
}

std::vector<std::vector<NodeIndex>> DependencyMatrix::successors() const {
  std::vector<std::vector<NodeIndex>> out(size());
  for (std::size_t row = 0; row < size(); ++row) out[row] = row_support(row);
  return out;
}

IncidenceMatrix incidence_matrix(const ActivityGraph& graph) {
  check_capacity(graph.node_count());
  IncidenceMatrix m;
  m.row_labels = node_labels(graph);
  m.col_labels.reserve(graph.edge_count());
  for (const ActivityEdge& e : graph.edges()) m.col_labels.push_back(e.id);
  m.cells.assign(m.rows() * m.cols(), 0);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    m.cells[graph.tail_of(e) * m.cols() + e] = graph.edges()[e].weight;
  }
  return m;
}

AdjacencyMatrix adjacency_matrix(const ActivityGraph& graph) {
  check_capacity(graph.node_count());
  AdjacencyMatrix m;
  m.labels = node_labels(graph);
  m.cells.assign(m.size() * m.size(), 0);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    Time& cell = m.cells[graph.tail_of(e) * m.size() + graph.head_of(e)];
    cell = std::max(cell, graph.edges()[e].weight);
  }
  return m;
}

DependencyMatrix dependency_matrix(const ActivityGraph& graph, EdgeView view) {
  DependencyMatrix m(node_labels(graph));
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (view == EdgeView::scheduling_only && !schedules(graph.edges()[e].kind))
      continue;
    m.set(graph.tail_of(e), graph.head_of(e));
  }
  return m;
}

DependencyMatrix transitive_closure(const DependencyMatrix& raw) {
  if (raw.closed()) {
    throw Error(ErrorCode::AlreadyClosed, "matrix is already a closure");
  }
  DependencyMatrix closure = raw;
  closure.closed_ = true;
  const std::size_t n = closure.size();
  const std::size_t words = closure.words_per_row();
  // reach(i, j) |= reach(i, k) && reach(k, j), one whole row at a time.
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t* pivot = closure.row_words(k).data();
    for (std::size_t i = 0; i < n; ++i) {
      if (!closure.test(i, k)) continue;
      std::uint64_t* row = closure.row_words(i).data();
      for (std::size_t w = 0; w < words; ++w) row[w] |= pivot[w];
    }
  }
  return closure;
}

CondensedGraph condense_sccs(const DependencyMatrix& raw) {
  if (raw.closed()) {
    throw Error(ErrorCode::AlreadyClosed,
                "condensation expects the raw dependency matrix");
  }
  const auto successors = raw.successors();
  CondensedGraph condensed;
  condensed.components = detail::strongly_connected_components(successors);
  condensed.component_of.assign(raw.size(), 0);
  for (std::size_t c = 0; c < condensed.components.size(); ++c) {
    for (NodeIndex v : condensed.components[c]) condensed.component_of[v] = c;
  }
  for (NodeIndex v = 0; v < raw.size(); ++v) {
    for (NodeIndex w : successors[v]) {
      const std::size_t from = condensed.component_of[v];
      const std::size_t to = condensed.component_of[w];
      if (from != to) condensed.edges.emplace_back(from, to);
    }
  }
  std::sort(condensed.edges.begin(), condensed.edges.end());
  condensed.edges.erase(
      std::unique(condensed.edges.begin(), condensed.edges.end()),
      condensed.edges.end());
  return condensed;
}

}  // namespace critloc

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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "critloc/graph.hpp"

namespace critloc {

/// Dense matrices are capped at this many nodes; larger inputs raise
/// Error(CapacityExceeded).
inline constexpr std::size_t kMaxMatrixNodes = 4096;

/// Node x edge. Each column holds the edge weight at its tail row and zero
/// elsewhere.
struct IncidenceMatrix {
  std::vector<std::string> row_labels;  // node ids
  std::vector<std::string> col_labels;  // edge ids
  std::vector<Time> cells;              // row-major

  std::size_t rows() const noexcept { return row_labels.size(); }
  std::size_t cols() const noexcept { return col_labels.size(); }
  Time at(std::size_t row, std::size_t col) const {
    return cells.at(row * cols() + col);
  }
};

/// Node x node; entry (m, n) is the largest weight over edges m -> n.
struct AdjacencyMatrix {
  std::vector<std::string> labels;
  std::vector<Time> cells;

  std::size_t size() const noexcept { return labels.size(); }
  Time at(std::size_t row, std::size_t col) const {
    return cells.at(row * size() + col);
  }
};

enum class EdgeView { all_edges, scheduling_only };

/// Boolean node x node matrix, bit-packed by row. Entry (m, n) = 1 means m
/// depends on n. A closed matrix is a transitive closure without the
/// reflexive base, so a set diagonal bit marks a node on a cycle.
class DependencyMatrix {
 public:
  DependencyMatrix() = default;
  explicit DependencyMatrix(std::vector<std::string> labels, bool closed = false);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool closed() const noexcept { return closed_; }

  bool test(std::size_t row, std::size_t col) const {
    return (row_words(row)[col / 64] >> (col % 64)) & 1U;
  }
  void set(std::size_t row, std::size_t col, bool value = true);

  std::span<const std::uint64_t> row_words(std::size_t row) const {
    return {bits_.data() + row * words_per_row_, words_per_row_};
  }
  std::span<std::uint64_t> row_words(std::size_t row) {
    return {bits_.data() + row * words_per_row_, words_per_row_};
  }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  /// Set columns of `row`, ascending.
  std::vector<NodeIndex> row_support(std::size_t row) const;
  std::size_t count() const;

  /// Successor lists read off the set bits.
  std::vector<std::vector<NodeIndex>> successors() const;

  bool operator==(const DependencyMatrix&) const = default;

 private:
  friend DependencyMatrix transitive_closure(const DependencyMatrix& raw);

  std::vector<std::string> labels_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
  bool closed_ = false;
};

struct CondensedGraph {
  /// Strongly connected components, ordered by smallest member; members
  /// ascending.
  std::vector<std::vector<NodeIndex>> components;
  /// Component id per node.
  std::vector<std::size_t> component_of;
  /// Deduplicated edges between distinct components, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

IncidenceMatrix incidence_matrix(const ActivityGraph& graph);
AdjacencyMatrix adjacency_matrix(const ActivityGraph& graph);

/// Support of every edge admitted by `view`; closed() == false.
DependencyMatrix dependency_matrix(const ActivityGraph& graph,
                                   EdgeView view = EdgeView::all_edges);

/// Warshall's boolean recurrence over bit rows. Throws Error(AlreadyClosed)
/// when given a closed matrix.
DependencyMatrix transitive_closure(const DependencyMatrix& raw);

/// Throws Error(AlreadyClosed) when given a closed matrix.
CondensedGraph condense_sccs(const DependencyMatrix& raw);

}  // namespace critloc

// Copyright 2026 The gpa Authors
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
#include <string>
#include <vector>

namespace gpa {

// Undirected edge between two vertex indices; u == v is a loop.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  bool operator==(const Edge&) const = default;
};

/// Finite undirected multigraph with ordered, named vertices.
///
/// Edges are kept as a multiset in insertion order; parallel edges and loops
/// are allowed. Immutable after construction.
class Multigraph {
 public:
  Multigraph() = default;

  /// Throws GraphError if an edge endpoint is out of range or a vertex name
  /// repeats.
  Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  /// Vertices named "0", "1", ... for index-built graphs.
  static Multigraph with_indexed_vertices(std::size_t n, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Loops contribute 2.
  std::size_t degree(std::size_t v) const { return degree_[v]; }
  std::size_t multiplicity(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return neighbors_[v]; }

  bool has_loops() const;
  bool has_parallel_edges() const;
  bool is_connected() const;

  /// Vertex sets of the connected components, each in increasing order;
  /// components ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;

  /// Subgraph induced on `keep` (vertex order follows `keep`).
  Multigraph induced(const std::vector<std::size_t>& keep) const;

  /// Same graph with vertex i moved to position perm[i].
  Multigraph relabeled(const std::vector<std::size_t>& perm) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degree_;
  // Distinct neighbours (loops included once), increasing.
  std::vector<std::vector<std::size_t>> neighbors_;
};

}  // namespace gpa

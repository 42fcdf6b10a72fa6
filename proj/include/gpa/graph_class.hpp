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
#include <optional>
#include <string>
#include <vector>

#include "gpa/multigraph.hpp"

namespace gpa {

enum class DiagramFamily { A, D, E };

/// Dynkin(X, n), Euclidean(X~, n) or Neither.
struct GraphClass {
  enum class Kind { Dynkin, Euclidean, Neither };

  Kind kind = Kind::Neither;
  DiagramFamily family = DiagramFamily::A;
  std::size_t index = 0;

  static GraphClass dynkin(DiagramFamily f, std::size_t n) { return {Kind::Dynkin, f, n}; }
  static GraphClass euclidean(DiagramFamily f, std::size_t n) { return {Kind::Euclidean, f, n}; }
  static GraphClass neither() { return {}; }

  bool is_dynkin() const { return kind == Kind::Dynkin; }
  bool is_euclidean() const { return kind == Kind::Euclidean; }
  bool is(Kind k, DiagramFamily f, std::size_t n) const {
    return kind == k && family == f && index == n;
  }

  /// Vertices of the diagram: n for Dynkin, n + 1 for Euclidean.
  std::size_t vertex_count() const { return kind == Kind::Euclidean ? index + 1 : index; }

  /// "Dynkin A5", "Euclidean D~4", "Neither".
  std::string to_string() const;

  bool operator==(const GraphClass& other) const {
    if (kind != other.kind) return false;
    return kind == Kind::Neither || (family == other.family && index == other.index);
  }
};

/// Branch vertex (if any) and arm lengths in edges, sorted ascending.
/// A path has no branch vertex and a single arm spanning all its edges.
struct ArmProfile {
  std::optional<std::size_t> branch;
  std::vector<std::size_t> arms;
};

/// Throws GraphError unless `tree` is a simple connected tree, and
/// NotStarLike if more than one vertex has degree >= 3.
ArmProfile arm_decomposition(const Multigraph& tree);

/// Structural Dynkin / Euclidean recognition. Throws GraphError on empty or
/// disconnected input.
GraphClass classify_graph(const Multigraph& g);

}  // namespace gpa

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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpa/multigraph.hpp"

namespace gpa {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;

  bool operator==(const Arrow&) const = default;
};

/// Finite quiver with named vertices and arrows.
///
/// Iteration order over vertices and arrows is declaration order. The
/// constructor rejects duplicate ids and arrows whose endpoints are not
/// declared vertices.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  std::optional<std::size_t> vertex_index(std::string_view id) const;
  std::optional<std::size_t> arrow_index(std::string_view id) const;
  std::size_t source(std::size_t arrow) const { return source_[arrow]; }
  std::size_t target(std::size_t arrow) const { return target_[arrow]; }

  bool operator==(const Quiver& other) const {
    return vertices_ == other.vertices_ && arrows_ == other.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> source_;
  std::vector<std::size_t> target_;
  std::map<std::string, std::size_t, std::less<>> vertex_index_;
  std::map<std::string, std::size_t, std::less<>> arrow_index_;
};

/// A path, read left to right: arrows[k] ends where arrows[k+1] starts.
/// A trivial path has no arrows and names its vertex instead.
struct Path {
  std::string vertex;
  std::vector<std::string> arrows;

  Path() = default;
  explicit Path(std::vector<std::string> arrow_ids) : arrows(std::move(arrow_ids)) {}
  static Path trivial(std::string v) {
    Path p;
    p.vertex = std::move(v);
    return p;
  }

  bool is_trivial() const { return arrows.empty(); }
  std::size_t length() const { return arrows.size(); }
  bool contains_factor(const Path& factor) const;

  /// "e_<vertex>" for trivial paths, otherwise arrows joined by '*'.
  std::string to_string() const;

  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

bool is_path_of(const Quiver& q, const Path& p);

/// Finite set of monomial generators, kept in declaration order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Path> generators) : generators_(std::move(generators)) {}

  const std::vector<Path>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }
  std::size_t size() const { return generators_.size(); }

  /// Drops duplicates and every generator that contains another one as a
  /// contiguous factor. Survivors keep their relative order.
  MonomialIdeal normalized() const;

  /// Equality of the generated ideals (compares normalized generator sets).
  bool same_ideal(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::vector<Path> generators_;
};

struct BoundQuiver {
  Quiver quiver;
  MonomialIdeal ideal;

  bool operator==(const BoundQuiver&) const = default;
};

/// One vertex, no arrows: the field itself.
BoundQuiver field_algebra(std::string vertex);
/// m isolated vertices named prefix1..prefixm.
BoundQuiver semisimple_algebra(std::size_t m, const std::string& prefix = "v");

/// Reverses every arrow and every generator.
Quiver opposite(const Quiver& q);
BoundQuiver opposite(const BoundQuiver& bq);

Multigraph underlying_graph(const Quiver& q);
bool is_acyclic(const Quiver& q);
bool has_loops(const Quiver& q);

/// Paths (trivial ones included) avoiding every generator as a factor, or
/// nullopt when there are infinitely many. Ordered by length, then by arrow
/// declaration order; trivial paths follow vertex order.
/// Throws InvalidIdeal if a generator is not a path of the quiver.
std::optional<std::vector<Path>> surviving_paths(const BoundQuiver& bq);

struct AdmissibilityError {
  enum class Kind { InvalidGenerator, GeneratorTooShort, InfiniteDimensional };
  Kind kind;
  // The short or invalid generator, or a cycle of surviving arrows.
  Path witness;
  std::string message;
};

std::optional<AdmissibilityError> check_admissible(const BoundQuiver& bq);

/// Number of surviving paths. Throws AdmissibilityFailure or InvalidIdeal.
std::uint64_t dimension(const BoundQuiver& bq);

}  // namespace gpa

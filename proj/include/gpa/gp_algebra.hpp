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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpa/quiver.hpp"

namespace gpa {

/// Generalized path algebra k(Gamma, A): a quiver Gamma with a bound quiver
/// (Sigma_i, I_i) attached to every vertex. Vertices without an explicit
/// algebra carry the field k.
class GpAlgebra {
 public:
  GpAlgebra() = default;

  /// Throws GpValidationError if a key of `algebras` is not a Gamma vertex.
  GpAlgebra(Quiver gamma, std::map<std::string, BoundQuiver> algebras);

  const Quiver& gamma() const { return gamma_; }
  /// Aligned with gamma().vertices().
  const std::vector<BoundQuiver>& algebras() const { return algebras_; }
  const BoundQuiver& algebra(std::size_t gamma_vertex) const { return algebras_[gamma_vertex]; }
  /// False where the vertex carries the implicit k.
  bool is_explicit(std::size_t gamma_vertex) const { return explicit_[gamma_vertex]; }

  /// True when every attached ideal is empty.
  bool relation_free() const;

  /// Explicit algebras keyed by Gamma vertex.
  std::map<std::string, BoundQuiver> explicit_algebras() const;

 private:
  Quiver gamma_;
  std::vector<BoundQuiver> algebras_;
  std::vector<bool> explicit_;
};

/// Reverses Gamma and every attached algebra.
GpAlgebra opposite(const GpAlgebra& gp);

struct GpError {
  enum class Kind {
    GammaEmpty,
    GammaHasCycle,
    GammaDisconnected,
    DuplicateVertexNamespace,
    AlgebraNotAdmissible,
  };
  Kind kind;
  std::string location;  // Gamma vertex or id involved, may be empty
  std::string message;
};

std::optional<GpError> validate_gp(const GpAlgebra& gp);

enum class ArrowType { TypeI, TypeII };

struct VertexOrigin {
  std::size_t block = 0;      // Gamma vertex index
  std::string sigma_vertex;   // vertex id inside Sigma_block
};

struct ArrowOrigin {
  ArrowType type = ArrowType::TypeI;
  std::size_t block = 0;        // Gamma arrow (type I) or Gamma vertex (type II)
  std::string original_id;      // Gamma arrow id or Sigma arrow id
};

/// The ordinary quiver Q of a gp-algebra with its lifted ideal J.
///
/// Vertex ids: the Gamma vertex id for blocks carrying the implicit k,
/// otherwise "<gamma vertex>.<sigma vertex>". Type-I arrows induced by a
/// Gamma arrow g are named g_1, g_2, ... over (source, target) pairs in
/// block order. Type-II arrows keep their Sigma id unless another block uses
/// the same id, in which case they become "<gamma vertex>.<id>".
struct OrdinaryQuiver {
  Quiver quiver;
  std::vector<ArrowType> arrow_types;  // aligned with quiver.arrows()
  MonomialIdeal lifted_ideal;
  std::vector<VertexOrigin> vertex_origins;
  std::vector<ArrowOrigin> arrow_origins;

  BoundQuiver bound() const { return {quiver, lifted_ideal}; }
  std::size_t count(ArrowType type) const;
};

/// Throws GpValidationError when validate_gp fails.
OrdinaryQuiver build_ordinary_quiver(const GpAlgebra& gp);

/// Vertices and arrows selected from a larger quiver, in its order.
struct Subquiver {
  std::vector<std::string> vertices;
  std::vector<std::string> arrows;

  bool operator==(const Subquiver&) const = default;
};

/// Copy of Gamma inside Q: `choice` picks one Sigma vertex per Gamma vertex
/// (blocks with a single vertex may be omitted). Vertices follow Gamma's
/// order and arrows follow Gamma's arrow order. Throws GpValidationError on
/// an invalid choice.
Subquiver gamma_embedding(const GpAlgebra& gp, const std::map<std::string, std::string>& choice);

/// Materializes a subquiver of `q` as a quiver of its own.
Quiver subquiver_of(const Quiver& q, const Subquiver& sub);

}  // namespace gpa

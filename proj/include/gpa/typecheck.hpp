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

#include "gpa/gp_algebra.hpp"
#include "gpa/graph_class.hpp"
#include "gpa/quiver.hpp"
#include "gpa/tits.hpp"

namespace gpa {

/// Shapes of attached algebras that the classification theorems single out.
struct AlgebraPattern {
  enum class Kind {
    K,                    // the field
    SemisimpleKm,         // k^m, m >= 2
    PathA2,               // path algebra of a single arrow
    RadSquareZeroDouble,  // a <-> b bound by both length-2 paths
    Other,
  };

  Kind kind = Kind::Other;
  std::size_t m = 0;  // vertex count for SemisimpleKm

  bool is_k() const { return kind == Kind::K; }
  bool is_km(std::size_t count) const { return kind == Kind::SemisimpleKm && m == count; }
  std::string to_string() const;

  bool operator==(const AlgebraPattern&) const = default;
};

/// Expects an admissible bound quiver.
AlgebraPattern recognize_pattern(const BoundQuiver& bq);

/// The three-vertex algebras B_I and B_I^op: a two-cycle a <-> b together
/// with a third vertex c sending an arrow to both a and b (B_I) or receiving
/// one from both (B_I^op), bound by relations on the two-cycle only.
struct BIShape {
  enum class Kind { NotBI, BI, BIop };

  Kind kind = Kind::NotBI;
  // Whether the ideal is exactly <ab, ba> for the two-cycle arrows a, b.
  bool tame = false;

  bool operator==(const BIShape&) const = default;
};

BIShape recognize_bi(const BoundQuiver& bq);

struct Verdict {
  enum class Kind { Finite, StrictTame, Wild, OutOfScope, Indeterminate };

  Kind kind = Kind::Indeterminate;
  std::size_t indecomposables = 0;  // Finite only
  std::optional<Subquiver> certificate;  // Wild only, best effort
  std::string reason;

  static std::string kind_name(Kind k);
  std::string name() const { return kind_name(kind); }
};

/// Representation type of a gp-algebra. Throws GpValidationError when
/// validate_gp fails.
Verdict decide_type(const GpAlgebra& gp);

/// Searches connected subgraphs of Q (type-I arrows plus at most one type-II
/// arrow, at most 10 vertices) for one that is neither Dynkin nor Euclidean.
/// Returns the first hit in (size, lexicographic vertex set) order.
std::optional<Subquiver> certificate_search(const OrdinaryQuiver& oq);

/// Verdict a hereditary algebra with this underlying graph has, read off
/// the Tits form of each component: all positive definite -> Finite (with
/// the total positive-root count), all positive definite or corank 1 with
/// at least one corank 1 -> StrictTame, otherwise Wild.
Verdict tits_verdict(const Multigraph& g);

}  // namespace gpa

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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "gpa/multigraph.hpp"

namespace gpa {

using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Symmetric Cartan-style matrix of a loop-free multigraph: 2 on the
/// diagonal, minus the edge multiplicity off it. q(x) = x^T C x / 2.
class TitsForm {
 public:
  /// Throws Unsupported if the graph has loops.
  explicit TitsForm(const Multigraph& g);

  const IntMatrix& matrix() const { return matrix_; }
  std::size_t dimension() const { return static_cast<std::size_t>(matrix_.rows()); }

  template <typename Derived>
  std::int64_t operator()(const Eigen::MatrixBase<Derived>& x) const {
    return x.dot(matrix_ * x) / 2;
  }

  template <typename DerivedX, typename DerivedY>
  std::int64_t bilinear(const Eigen::MatrixBase<DerivedX>& x,
                        const Eigen::MatrixBase<DerivedY>& y) const {
    return x.dot(matrix_ * y);
  }

 private:
  IntMatrix matrix_;
};

struct Definiteness {
  enum class Kind { PositiveDefinite, PositiveSemidefinite, Indefinite };

  Kind kind = Kind::Indefinite;
  std::size_t corank = 0;

  bool positive_definite() const { return kind == Kind::PositiveDefinite; }
  bool semidefinite_corank(std::size_t k) const {
    return kind == Kind::PositiveSemidefinite && corank == k;
  }

  /// "PD", "PSD corank k", "Indefinite".
  std::string to_string() const;

  bool operator==(const Definiteness&) const = default;
};

/// Definiteness of a symmetric matrix by symmetric Gaussian elimination in
/// `Scalar`, which must be an exact field type. A zero pivot is allowed only
/// if the rest of its row is zero; it then counts towards the corank.
template <typename Scalar, typename Derived>
Definiteness symmetric_definiteness(const Eigen::MatrixBase<Derived>& form) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix a = form.template cast<Scalar>();
  const Eigen::Index n = a.rows();
  std::size_t corank = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index rest = n - k - 1;
    const Scalar pivot = a(k, k);
    if (pivot < 0) return {Definiteness::Kind::Indefinite, 0};
    if (pivot == 0) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (a(k, j) != 0) return {Definiteness::Kind::Indefinite, 0};
      }
      ++corank;
      continue;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Scalar factor = a(i, k) / pivot;
      a.row(i).tail(rest) -= factor * a.row(k).tail(rest);
    }
  }
  if (corank == 0) return {Definiteness::Kind::PositiveDefinite, 0};
  return {Definiteness::Kind::PositiveSemidefinite, corank};
}

/// The same elimination kept fraction free (Bareiss): every entry is a
/// minor of the input, so integer division stays exact. Returns nullopt if
/// an entry leaves the int64 range.
std::optional<Definiteness> fraction_free_definiteness(const IntMatrix& form);

/// Throws Unsupported on loops. Components are not required to be connected.
/// Runs the fraction-free elimination and falls back to Rational on overflow.
Definiteness definiteness(const Multigraph& g);

/// Radical generator of the Tits matrix when its corank is exactly 1, scaled
/// to a primitive integer vector with positive leading nonzero entry.
std::optional<IntVector> null_root(const Multigraph& g);

/// Nonzero x >= 0 with every coordinate <= bound and q(x) = 1, sorted
/// lexicographically. Throws NotDynkin unless the form is positive definite.
std::vector<IntVector> enumerate_positive_roots(const Multigraph& g, int bound = 6);

/// Number of positive roots. Throws NotDynkin for non-Dynkin input.
std::size_t indecomposable_count(const Multigraph& g);

/// Strict lexicographic order on integer vectors of equal size.
bool lexicographically_less(const IntVector& a, const IntVector& b);

}  // namespace gpa

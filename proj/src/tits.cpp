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

#include "gpa/tits.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include <boost/integer/common_factor_rt.hpp>

#include "gpa/errors.hpp"

namespace gpa {

TitsForm::TitsForm(const Multigraph& g) {
  if (g.has_loops()) throw Unsupported("the Tits form is defined for loop-free graphs only");
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  matrix_ = 2 * IntMatrix::Identity(n, n);
  for (const Edge& e : g.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    matrix_(u, v) -= 1;
    matrix_(v, u) -= 1;
  }
}

std::string Definiteness::to_string() const {
  switch (kind) {
    case Kind::PositiveDefinite:
      return "PD";
    case Kind::PositiveSemidefinite:
      return "PSD corank " + std::to_string(corank);
    case Kind::Indefinite:
      break;
  }
  return "Indefinite";
}

std::optional<Definiteness> fraction_free_definiteness(const IntMatrix& form) {
  IntMatrix a = form;
  const Eigen::Index n = a.rows();
  // Leading minor of the pivots accepted so far; rows skipped as zero do not
  // enter it.
  std::int64_t previous = 1;
  std::size_t corank = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const std::int64_t pivot = a(k, k);
    if (pivot < 0) return Definiteness{Definiteness::Kind::Indefinite, 0};
    if (pivot == 0) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (a(k, j) != 0) return Definiteness{Definiteness::Kind::Indefinite, 0};
      }
      ++corank;
      continue;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        const __int128 value =
            (static_cast<__int128>(pivot) * a(i, j) - static_cast<__int128>(a(i, k)) * a(k, j)) / previous;
        if (value > std::numeric_limits<std::int64_t>::max() ||
            value < std::numeric_limits<std::int64_t>::min()) {
          return std::nullopt;
        }
        a(i, j) = static_cast<std::int64_t>(value);
      }
    }
    previous = pivot;
  }
  if (corank == 0) return Definiteness{Definiteness::Kind::PositiveDefinite, 0};
  return Definiteness{Definiteness::Kind::PositiveSemidefinite, corank};
}

Definiteness definiteness(const Multigraph& g) {
  const TitsForm form(g);
  if (auto fast = fraction_free_definiteness(form.matrix())) return *fast;
  return symmetric_definiteness<Rational>(form.matrix());
}

bool lexicographically_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

std::optional<IntVector> null_root(const Multigraph& g) {
  using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix a = TitsForm(g).matrix().cast<Rational>();
  const Eigen::Index n = a.rows();

  // Reduced row echelon form.
  std::vector<Eigen::Index> pivot_columns;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < n; ++col) {
    Eigen::Index pick = row;
    while (pick < n && a(pick, col) == 0) ++pick;
    if (pick == n) continue;
    a.row(row).swap(a.row(pick));
    a.row(row) /= Rational(a(row, col));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i != row && a(i, col) != 0) a.row(i) -= Rational(a(i, col)) * a.row(row);
    }
    pivot_columns.push_back(col);
    ++row;
  }
  if (static_cast<Eigen::Index>(pivot_columns.size()) != n - 1) return std::nullopt;

  Eigen::Index free_column = 0;
  while (std::find(pivot_columns.begin(), pivot_columns.end(), free_column) != pivot_columns.end()) {
    ++free_column;
  }
  Eigen::Matrix<Rational, Eigen::Dynamic, 1> kernel = Eigen::Matrix<Rational, Eigen::Dynamic, 1>::Zero(n);
  kernel(free_column) = 1;
  for (std::size_t r = 0; r < pivot_columns.size(); ++r) {
    kernel(pivot_columns[r]) = -a(static_cast<Eigen::Index>(r), free_column);
  }

  using boost::multiprecision::cpp_int;
  cpp_int common_denominator = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    common_denominator = boost::integer::lcm(common_denominator,
                                             boost::multiprecision::denominator(kernel(i)));
  }
  std::vector<cpp_int> scaled(static_cast<std::size_t>(n));
  cpp_int divisor = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Rational value = kernel(i) * common_denominator;
    scaled[static_cast<std::size_t>(i)] = boost::multiprecision::numerator(value);
    divisor = boost::integer::gcd(divisor, scaled[static_cast<std::size_t>(i)]);
  }
  const auto leading = std::find_if(scaled.begin(), scaled.end(), [](const cpp_int& v) { return v != 0; });
  if (*leading < 0) divisor = -divisor;
  IntVector root(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    root(i) = static_cast<std::int64_t>(scaled[static_cast<std::size_t>(i)] / divisor);
  }
  return root;
}

std::vector<IntVector> enumerate_positive_roots(const Multigraph& g, int bound) {
  const TitsForm form(g);
  if (!symmetric_definiteness<Rational>(form.matrix()).positive_definite()) {
    throw NotDynkin("positive roots are enumerated for Dynkin graphs only");
  }
  const auto n = static_cast<Eigen::Index>(form.dimension());
  auto less = [](const IntVector& a, const IntVector& b) { return lexicographically_less(a, b); };
  std::set<IntVector, decltype(less)> roots(less);
  std::vector<IntVector> frontier;
  if (bound >= 1) {
    for (Eigen::Index i = 0; i < n; ++i) {
      frontier.push_back(IntVector::Unit(n, i));
      roots.insert(frontier.back());
    }
  }
  // x + e_i is a root exactly when (Cx)_i = -1; every positive root is
  // reached from a simple root through such steps.
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const IntVector& x : frontier) {
      const IntVector cx = form.matrix() * x;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (cx(i) != -1 || x(i) >= bound) continue;
        IntVector y = x;
        y(i) += 1;
        if (roots.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

std::size_t indecomposable_count(const Multigraph& g) {
  return enumerate_positive_roots(g).size();
}

}  // namespace gpa

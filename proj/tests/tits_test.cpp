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

#include <algorithm>

#include <gtest/gtest.h>

#include "gpa/errors.hpp"
#include "gpa/tits.hpp"
#include "multigraph_enum.hpp"
#include "oracles.hpp"

namespace gpa {
namespace {

using testing::dynkin_graph;
using testing::euclidean_graph;

IntVector vec(std::initializer_list<std::int64_t> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  std::copy(values.begin(), values.end(), v.data());
  return v;
}

Multigraph edge_of_multiplicity(std::size_t m) {
  return Multigraph::with_indexed_vertices(2, std::vector<Edge>(m, Edge{0, 1}));
}

TEST(TitsForm, MatrixAndValues) {
  const TitsForm q(Multigraph::with_indexed_vertices(3, {{0, 1}, {0, 1}, {1, 2}}));
  IntMatrix expected(3, 3);
  expected << 2, -2, 0, -2, 2, -1, 0, -1, 2;
  EXPECT_EQ(q.matrix(), expected);
  for (Eigen::Index i = 0; i < 3; ++i) EXPECT_EQ(q(IntVector::Unit(3, i)), 1);
  EXPECT_EQ(q(vec({1, 1, 0})), 0);
  EXPECT_EQ(q.bilinear(vec({1, 0, 0}), vec({0, 1, 0})), -2);
  EXPECT_THROW(TitsForm(Multigraph::with_indexed_vertices(1, {{0, 0}})), Unsupported);
}

TEST(Definiteness, SmallForms) {
  EXPECT_EQ(definiteness(edge_of_multiplicity(1)), (Definiteness{Definiteness::Kind::PositiveDefinite, 0}));
  EXPECT_EQ(definiteness(edge_of_multiplicity(2)), (Definiteness{Definiteness::Kind::PositiveSemidefinite, 1}));
  EXPECT_EQ(definiteness(edge_of_multiplicity(3)).kind, Definiteness::Kind::Indefinite);
  EXPECT_EQ(TitsForm(edge_of_multiplicity(3))(vec({1, 1})), -1);
  EXPECT_EQ(definiteness(edge_of_multiplicity(2)).to_string(), "PSD corank 1");
  EXPECT_EQ(definiteness(edge_of_multiplicity(1)).to_string(), "PD");
  EXPECT_EQ(definiteness(edge_of_multiplicity(3)).to_string(), "Indefinite");
}

TEST(Definiteness, DisjointEuclideanPiecesAddCorank) {
  const Multigraph g = Multigraph::with_indexed_vertices(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}});
  EXPECT_TRUE(definiteness(g).semidefinite_corank(2));
}

TEST(Definiteness, EliminationVariantsAgreeWithEigenvalues) {
  const auto classes = testing::connected_multigraph_classes(6, 2);
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t code : classes[std::size_t(n)]) {
      const Multigraph g = testing::to_multigraph(n, code);
      const IntMatrix c = TitsForm(g).matrix();
      const Definiteness exact = symmetric_definiteness<Rational>(c);
      const auto fast = fraction_free_definiteness(c);
      ASSERT_TRUE(fast.has_value());
      EXPECT_EQ(*fast, exact);
      EXPECT_EQ(testing::eigen_definiteness(g), exact);
    }
  }
}

TEST(Definiteness, FractionFreeReportsOverflow) {
  IntMatrix big(3, 3);
  const std::int64_t h = std::int64_t{1} << 40;
  big << h, 1, 1, 1, h, 1, 1, 1, h;
  EXPECT_FALSE(fraction_free_definiteness(big).has_value());
  EXPECT_TRUE(symmetric_definiteness<Rational>(big).positive_definite());
}

TEST(NullRoot, EuclideanRadicalIsPositive) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (auto family : {DiagramFamily::A, DiagramFamily::D, DiagramFamily::E}) {
      if (family == DiagramFamily::D && n < 4) continue;
      if (family == DiagramFamily::E && n < 6) continue;
      const Multigraph g = euclidean_graph(family, n);
      const auto root = null_root(g);
      ASSERT_TRUE(root.has_value());
      EXPECT_TRUE((root->array() > 0).all());
      EXPECT_TRUE((TitsForm(g).matrix() * *root).isZero());
    }
  }
  EXPECT_FALSE(null_root(dynkin_graph(DiagramFamily::E, 8)).has_value());
}

TEST(NullRoot, KnownVectors) {
  // Highest coefficient 6 sits on the branch vertex of the largest diagram.
  const auto e8 = null_root(euclidean_graph(DiagramFamily::E, 8));
  ASSERT_TRUE(e8.has_value());
  EXPECT_EQ(e8->maxCoeff(), 6);
  EXPECT_EQ((*e8)(0), 6);
  EXPECT_EQ(*null_root(euclidean_graph(DiagramFamily::A, 1)), vec({1, 1}));
}

TEST(PositiveRoots, SmallCases) {
  EXPECT_EQ(enumerate_positive_roots(dynkin_graph(DiagramFamily::A, 1)), (std::vector<IntVector>{vec({1})}));
  const std::vector<IntVector> a3{vec({0, 0, 1}), vec({0, 1, 0}), vec({0, 1, 1}),
                                  vec({1, 0, 0}), vec({1, 1, 0}), vec({1, 1, 1})};
  EXPECT_EQ(enumerate_positive_roots(dynkin_graph(DiagramFamily::A, 3)), a3);
  EXPECT_EQ(testing::brute_force_roots(dynkin_graph(DiagramFamily::A, 3), 1), a3);
  EXPECT_THROW(enumerate_positive_roots(edge_of_multiplicity(2)), NotDynkin);
  EXPECT_THROW(indecomposable_count(euclidean_graph(DiagramFamily::D, 4)), NotDynkin);
}

TEST(PositiveRoots, ClosedFormCounts) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(indecomposable_count(dynkin_graph(DiagramFamily::A, n)),
              testing::positive_root_count(DiagramFamily::A, n));
  }
  for (std::size_t n = 4; n <= 8; ++n) {
    EXPECT_EQ(indecomposable_count(dynkin_graph(DiagramFamily::D, n)),
              testing::positive_root_count(DiagramFamily::D, n));
  }
  EXPECT_EQ(indecomposable_count(dynkin_graph(DiagramFamily::E, 6)), 36U);
  EXPECT_EQ(indecomposable_count(dynkin_graph(DiagramFamily::E, 7)), 63U);
}

TEST(PositiveRoots, MatchBruteForceOnSmallDiagrams) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto family : {DiagramFamily::A, DiagramFamily::D, DiagramFamily::E}) {
      if ((family == DiagramFamily::D && n < 4) || (family == DiagramFamily::E && n < 6)) continue;
      const Multigraph g = dynkin_graph(family, n);
      EXPECT_EQ(enumerate_positive_roots(g), testing::brute_force_roots(g, 6));
    }
  }
}

TEST(PositiveRoots, SortedAndRespectBound) {
  const auto roots = enumerate_positive_roots(dynkin_graph(DiagramFamily::E, 7));
  EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end(), lexicographically_less));
  const Multigraph e8 = dynkin_graph(DiagramFamily::E, 8);
  EXPECT_EQ(enumerate_positive_roots(e8, 5), testing::brute_force_roots(e8, 5));
  EXPECT_LT(enumerate_positive_roots(e8, 5).size(), 120U);
}

}  // namespace
}  // namespace gpa

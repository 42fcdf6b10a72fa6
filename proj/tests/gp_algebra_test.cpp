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

#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gpa/errors.hpp"
#include "gpa/gp_algebra.hpp"
#include "oracles.hpp"

namespace gpa {
namespace {

GpAlgebra worked_example() { return testing::load_gp(testing::data_path("worked_example.gpa")); }

Quiver a2() { return Quiver({"1", "2"}, {{"a", "1", "2"}}); }

// Random algebra on a random gamma; attached quivers are acyclic with
// length-two relations, or a single loop killed by its square.
GpAlgebra random_gp(std::mt19937_64& rng) {
  const GpAlgebra shape = testing::random_hereditary_gp(rng, 5);
  std::map<std::string, BoundQuiver> algebras;
  for (std::size_t i = 0; i < shape.gamma().vertex_count(); ++i) {
    const std::string prefix = "s" + std::to_string(i);
    const int kind = std::uniform_int_distribution<int>(0, 5)(rng);
    if (kind == 0) continue;
    if (kind == 1) {
      algebras.emplace(shape.gamma().vertices()[i],
                       BoundQuiver{Quiver({prefix + "v"}, {{prefix + "l", prefix + "v", prefix + "v"}}),
                                   MonomialIdeal({Path({prefix + "l", prefix + "l"})})});
      continue;
    }
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const Quiver q = testing::random_quiver(rng, n, std::uniform_int_distribution<std::size_t>(0, 4)(rng), true, prefix);
    std::vector<Path> relations;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      for (std::size_t b = 0; b < q.arrow_count(); ++b) {
        if (q.target(a) == q.source(b) && std::uniform_int_distribution<int>(0, 1)(rng)) {
          relations.push_back(Path({q.arrows()[a].id, q.arrows()[b].id}));
        }
      }
    }
    algebras.emplace(shape.gamma().vertices()[i], BoundQuiver{q, MonomialIdeal(relations)});
  }
  return GpAlgebra(shape.gamma(), algebras);
}

TEST(OrdinaryQuiver, WorkedExample) {
  const OrdinaryQuiver oq = build_ordinary_quiver(worked_example());
  EXPECT_EQ(oq.quiver.vertices(), (std::vector<std::string>{"1", "2.21", "2.22", "2.23", "3"}));
  EXPECT_EQ(oq.quiver.arrow_count(), 11U);
  EXPECT_EQ(oq.count(ArrowType::TypeI), 9U);
  EXPECT_EQ(oq.count(ArrowType::TypeII), 2U);
  EXPECT_EQ(oq.lifted_ideal.generators(), (std::vector<Path>{Path({"delta", "eps"})}));
  EXPECT_EQ(oq.quiver.arrows()[0], (Arrow{"alpha_1", "1", "2.21"}));
  EXPECT_EQ(oq.quiver.arrows()[8], (Arrow{"gamma_3", "2.23", "3"}));
  EXPECT_EQ(oq.quiver.arrows()[9], (Arrow{"delta", "2.21", "2.22"}));
  EXPECT_EQ(oq.vertex_origins[2].block, 1U);
  EXPECT_EQ(oq.vertex_origins[2].sigma_vertex, "22");
  EXPECT_EQ(oq.arrow_origins[4].original_id, "beta");
}

TEST(OrdinaryQuiver, SingleVertexGammaEchoesTheAlgebra) {
  const BoundQuiver sigma{Quiver({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}}),
                          MonomialIdeal({Path({"x", "y"})})};
  const OrdinaryQuiver oq = build_ordinary_quiver(GpAlgebra(Quiver({"1"}, {}), {{"1", sigma}}));
  EXPECT_EQ(oq.quiver.vertices(), (std::vector<std::string>{"1.a", "1.b", "1.c"}));
  EXPECT_EQ(oq.count(ArrowType::TypeII), 2U);
  EXPECT_EQ(oq.count(ArrowType::TypeI), 0U);
  EXPECT_EQ(oq.lifted_ideal, sigma.ideal);
  EXPECT_EQ(dimension(oq.bound()), dimension(sigma));
}

TEST(OrdinaryQuiver, SemisimpleSourceGivesTwoArrows) {
  const OrdinaryQuiver oq = build_ordinary_quiver(GpAlgebra(a2(), {{"1", semisimple_algebra(2)}}));
  EXPECT_EQ(oq.quiver.vertex_count(), 3U);
  EXPECT_EQ(oq.quiver.arrow_count(), 2U);
  EXPECT_EQ(oq.count(ArrowType::TypeI), 2U);
  EXPECT_TRUE(oq.lifted_ideal.empty());
}

TEST(OrdinaryQuiver, SharedSigmaArrowIdsArePrefixed) {
  const BoundQuiver arrow{Quiver({"p", "q"}, {{"x", "p", "q"}}), {}};
  const OrdinaryQuiver oq = build_ordinary_quiver(GpAlgebra(a2(), {{"1", arrow}, {"2", arrow}}));
  EXPECT_TRUE(oq.quiver.arrow_index("1.x").has_value());
  EXPECT_TRUE(oq.quiver.arrow_index("2.x").has_value());
}

TEST(GammaEmbedding, WorkedExample) {
  const Subquiver sub = gamma_embedding(worked_example(), {{"2", "21"}});
  EXPECT_EQ(sub.vertices, (std::vector<std::string>{"1", "2.21", "3"}));
  EXPECT_EQ(sub.arrows, (std::vector<std::string>{"alpha_1", "beta_1", "gamma_1"}));
  const Quiver copy = subquiver_of(build_ordinary_quiver(worked_example()).quiver, sub);
  EXPECT_EQ(copy.arrow_count(), 3U);
  EXPECT_EQ(underlying_graph(copy).multiplicity(1, 2), 2U);
}

TEST(GammaEmbedding, SingleVertexAndSemisimpleChoices) {
  const Subquiver single = gamma_embedding(GpAlgebra(Quiver({"1"}, {}), {}), {});
  EXPECT_EQ(single.vertices, (std::vector<std::string>{"1"}));
  EXPECT_TRUE(single.arrows.empty());

  const GpAlgebra gp(a2(), {{"1", semisimple_algebra(3)}});
  const OrdinaryQuiver oq = build_ordinary_quiver(gp);
  for (const std::string v : {"v1", "v2", "v3"}) {
    const Subquiver sub = gamma_embedding(gp, {{"1", v}});
    ASSERT_EQ(sub.arrows.size(), 1U);
    const Arrow& arrow = oq.quiver.arrows()[*oq.quiver.arrow_index(sub.arrows[0])];
    EXPECT_EQ(arrow.source, "1." + v);
    EXPECT_EQ(arrow.target, "2");
  }
}

TEST(GammaEmbedding, InvalidChoices) {
  EXPECT_THROW(gamma_embedding(worked_example(), {}), GpValidationError);
  EXPECT_THROW(gamma_embedding(worked_example(), {{"2", "99"}}), GpValidationError);
  EXPECT_THROW(gamma_embedding(worked_example(), {{"7", "21"}}), GpValidationError);
}

TEST(Validate, Failures) {
  EXPECT_FALSE(validate_gp(worked_example()));
  EXPECT_EQ(validate_gp(GpAlgebra(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}), {}))->kind,
            GpError::Kind::GammaHasCycle);
  EXPECT_EQ(validate_gp(GpAlgebra(Quiver({"1", "2"}, {}), {}))->kind, GpError::Kind::GammaDisconnected);
  EXPECT_EQ(validate_gp(GpAlgebra())->kind, GpError::Kind::GammaEmpty);

  // Prefixed ids 1.x1 and 1.x2 stay clear of the vertex 1.x; 1.x itself does not.
  const GpAlgebra near_miss(Quiver({"1", "1.x"}, {{"a", "1", "1.x"}}), {{"1", semisimple_algebra(2, "x")}});
  const GpAlgebra clash(Quiver({"1", "1.x"}, {{"a", "1", "1.x"}}),
                             {{"1", BoundQuiver{Quiver({"x", "y"}, {}), {}}}});
  EXPECT_FALSE(validate_gp(near_miss));
  const auto error = validate_gp(clash);
  ASSERT_TRUE(error);
  EXPECT_EQ(error->kind, GpError::Kind::DuplicateVertexNamespace);
  EXPECT_EQ(error->location, "1.x");

  const BoundQuiver cycle{Quiver({"a", "b"}, {{"p", "a", "b"}, {"q", "b", "a"}}), {}};
  const auto inadmissible = validate_gp(GpAlgebra(a2(), {{"2", cycle}}));
  ASSERT_TRUE(inadmissible);
  EXPECT_EQ(inadmissible->kind, GpError::Kind::AlgebraNotAdmissible);
  EXPECT_EQ(inadmissible->location, "2");
  EXPECT_THROW(build_ordinary_quiver(GpAlgebra(a2(), {{"2", cycle}})), GpValidationError);
  EXPECT_THROW(GpAlgebra(a2(), {{"9", cycle}}), GpValidationError);
}

TEST(OrdinaryQuiverProperty, CountFormulasAndProvenance) {
  std::mt19937_64 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    const GpAlgebra gp = random_gp(rng);
    ASSERT_FALSE(validate_gp(gp)) << validate_gp(gp)->message;
    const OrdinaryQuiver oq = build_ordinary_quiver(gp);
    const Quiver& gamma = gp.gamma();

    std::size_t vertices = 0;
    std::size_t arrows = 0;
    bool sigma_loops = false;
    for (const auto& a : gp.algebras()) {
      vertices += a.quiver.vertex_count();
      arrows += a.quiver.arrow_count();
      sigma_loops = sigma_loops || has_loops(a.quiver);
    }
    for (std::size_t g = 0; g < gamma.arrow_count(); ++g) {
      arrows += gp.algebra(gamma.source(g)).quiver.vertex_count() * gp.algebra(gamma.target(g)).quiver.vertex_count();
    }
    EXPECT_EQ(oq.quiver.vertex_count(), vertices);
    EXPECT_EQ(oq.quiver.arrow_count(), arrows);
    EXPECT_EQ(has_loops(oq.quiver), sigma_loops);
    if (gp.relation_free()) EXPECT_TRUE(oq.lifted_ideal.empty());

    for (std::size_t a = 0; a < oq.quiver.arrow_count(); ++a) {
      const std::size_t from = oq.vertex_origins[oq.quiver.source(a)].block;
      const std::size_t to = oq.vertex_origins[oq.quiver.target(a)].block;
      if (oq.arrow_types[a] == ArrowType::TypeI) {
        EXPECT_NE(from, to);
        EXPECT_EQ(gamma.source(oq.arrow_origins[a].block), from);
        EXPECT_EQ(gamma.target(oq.arrow_origins[a].block), to);
      } else {
        EXPECT_EQ(from, to);
      }
    }
    for (const Path& g : oq.lifted_ideal.generators()) {
      for (const auto& id : g.arrows) EXPECT_EQ(oq.arrow_types[*oq.quiver.arrow_index(id)], ArrowType::TypeII);
    }
    EXPECT_EQ(underlying_graph(oq.quiver).edge_count(), testing::expanded_graph(gp).edge_count());
  }
}

TEST(Opposite, RoundTripAndExpansion) {
  const GpAlgebra gp = worked_example();
  const GpAlgebra op = opposite(gp);
  EXPECT_EQ(opposite(op).gamma(), gp.gamma());
  EXPECT_EQ(opposite(op).algebras(), gp.algebras());
  const OrdinaryQuiver oq = build_ordinary_quiver(op);
  EXPECT_EQ(oq.lifted_ideal.generators(), (std::vector<Path>{Path({"eps", "delta"})}));
  EXPECT_EQ(oq.quiver.arrow_count(), 11U);
}

}  // namespace
}  // namespace gpa

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

#include "gpa/gp_algebra.hpp"

#include <algorithm>
#include <set>

#include "gpa/errors.hpp"

namespace gpa {

GpAlgebra::GpAlgebra(Quiver gamma, std::map<std::string, BoundQuiver> algebras)
    : gamma_(std::move(gamma)) {
  const std::size_t n = gamma_.vertex_count();
  explicit_.assign(n, false);
  algebras_.reserve(n);
  for (const auto& v : gamma_.vertices()) algebras_.push_back(field_algebra(v));
  for (auto& [vertex, algebra] : algebras) {
    const auto index = gamma_.vertex_index(vertex);
    if (!index) throw GpValidationError("algebra attached to unknown gamma vertex '" + vertex + "'");
    algebras_[*index] = std::move(algebra);
    explicit_[*index] = true;
  }
}

bool GpAlgebra::relation_free() const {
  return std::all_of(algebras_.begin(), algebras_.end(),
                     [](const BoundQuiver& a) { return a.ideal.empty(); });
}

std::map<std::string, BoundQuiver> GpAlgebra::explicit_algebras() const {
  std::map<std::string, BoundQuiver> out;
  for (std::size_t i = 0; i < algebras_.size(); ++i) {
    if (explicit_[i]) out.emplace(gamma_.vertices()[i], algebras_[i]);
  }
  return out;
}

GpAlgebra opposite(const GpAlgebra& gp) {
  std::map<std::string, BoundQuiver> reversed;
  for (const auto& [vertex, algebra] : gp.explicit_algebras()) reversed.emplace(vertex, opposite(algebra));
  return GpAlgebra(opposite(gp.gamma()), std::move(reversed));
}

std::size_t OrdinaryQuiver::count(ArrowType type) const {
  return static_cast<std::size_t>(std::count(arrow_types.begin(), arrow_types.end(), type));
}

namespace {

bool gamma_connected(const Quiver& gamma) {
  return underlying_graph(gamma).is_connected();
}

std::string vertex_id(const GpAlgebra& gp, std::size_t block, const std::string& sigma_vertex) {
  if (!gp.is_explicit(block)) return gp.gamma().vertices()[block];
  return gp.gamma().vertices()[block] + "." + sigma_vertex;
}

// Q with ids assigned but without any validation of the result.
struct Expansion {
  std::vector<std::string> vertices;
  std::vector<VertexOrigin> vertex_origins;
  std::vector<Arrow> arrows;
  std::vector<ArrowType> arrow_types;
  std::vector<ArrowOrigin> arrow_origins;
  // Sigma arrow id -> Q arrow id, per block.
  std::vector<std::map<std::string, std::string>> renamed;
};

Expansion expand(const GpAlgebra& gp) {
  const Quiver& gamma = gp.gamma();
  Expansion x;
  std::vector<std::vector<std::string>> block_vertices(gamma.vertex_count());
  for (std::size_t i = 0; i < gamma.vertex_count(); ++i) {
    for (const auto& v : gp.algebra(i).quiver.vertices()) {
      block_vertices[i].push_back(vertex_id(gp, i, v));
      x.vertices.push_back(block_vertices[i].back());
      x.vertex_origins.push_back({i, v});
    }
  }

  for (std::size_t g = 0; g < gamma.arrow_count(); ++g) {
    const auto& sources = block_vertices[gamma.source(g)];
    const auto& targets = block_vertices[gamma.target(g)];
    std::size_t k = 0;
    for (const auto& a : sources) {
      for (const auto& b : targets) {
        x.arrows.push_back({gamma.arrows()[g].id + "_" + std::to_string(++k), a, b});
        x.arrow_types.push_back(ArrowType::TypeI);
        x.arrow_origins.push_back({ArrowType::TypeI, g, gamma.arrows()[g].id});
      }
    }
  }

  std::map<std::string, std::size_t> uses;
  for (const auto& algebra : gp.algebras()) {
    for (const auto& a : algebra.quiver.arrows()) ++uses[a.id];
  }
  x.renamed.resize(gamma.vertex_count());
  for (std::size_t i = 0; i < gamma.vertex_count(); ++i) {
    const Quiver& sigma = gp.algebra(i).quiver;
    for (std::size_t a = 0; a < sigma.arrow_count(); ++a) {
      const Arrow& arrow = sigma.arrows()[a];
      const std::string id = uses[arrow.id] > 1 ? gamma.vertices()[i] + "." + arrow.id : arrow.id;
      x.renamed[i].emplace(arrow.id, id);
      x.arrows.push_back({id, vertex_id(gp, i, arrow.source), vertex_id(gp, i, arrow.target)});
      x.arrow_types.push_back(ArrowType::TypeII);
      x.arrow_origins.push_back({ArrowType::TypeII, i, arrow.id});
    }
  }
  return x;
}

std::optional<std::string> first_duplicate(const std::vector<std::string>& ids) {
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) return id;
  }
  return std::nullopt;
}

}  // namespace

std::optional<GpError> validate_gp(const GpAlgebra& gp) {
  using Kind = GpError::Kind;
  const Quiver& gamma = gp.gamma();
  if (gamma.vertex_count() == 0) return GpError{Kind::GammaEmpty, "", "gamma has no vertices"};
  if (!is_acyclic(gamma)) {
    return GpError{Kind::GammaHasCycle, "", "gamma has an oriented cycle"};
  }
  if (!gamma_connected(gamma)) {
    return GpError{Kind::GammaDisconnected, "", "gamma is disconnected"};
  }

  const Expansion x = expand(gp);
  if (const auto dup = first_duplicate(x.vertices)) {
    return GpError{Kind::DuplicateVertexNamespace, *dup,
                   "expanded vertex id '" + *dup + "' arises from two blocks"};
  }
  std::vector<std::string> arrow_ids;
  for (const auto& a : x.arrows) arrow_ids.push_back(a.id);
  if (const auto dup = first_duplicate(arrow_ids)) {
    return GpError{Kind::DuplicateVertexNamespace, *dup,
                   "expanded arrow id '" + *dup + "' arises twice"};
  }

  for (std::size_t i = 0; i < gamma.vertex_count(); ++i) {
    if (const auto error = check_admissible(gp.algebra(i))) {
      const auto& v = gamma.vertices()[i];
      return GpError{Kind::AlgebraNotAdmissible, v,
                     "algebra at gamma vertex " + v + ": " + error->message};
    }
  }
  return std::nullopt;
}

OrdinaryQuiver build_ordinary_quiver(const GpAlgebra& gp) {
  if (const auto error = validate_gp(gp)) throw GpValidationError(error->message);
  Expansion x = expand(gp);

  OrdinaryQuiver oq;
  oq.quiver = Quiver(std::move(x.vertices), std::move(x.arrows));
  oq.arrow_types = std::move(x.arrow_types);
  oq.vertex_origins = std::move(x.vertex_origins);
  oq.arrow_origins = std::move(x.arrow_origins);

  std::vector<Path> lifted;
  for (std::size_t i = 0; i < gp.gamma().vertex_count(); ++i) {
    for (const Path& g : gp.algebra(i).ideal.generators()) {
      std::vector<std::string> ids;
      for (const auto& id : g.arrows) ids.push_back(x.renamed[i].at(id));
      lifted.emplace_back(std::move(ids));
    }
  }
  oq.lifted_ideal = MonomialIdeal(std::move(lifted));
  return oq;
}

Subquiver gamma_embedding(const GpAlgebra& gp, const std::map<std::string, std::string>& choice) {
  const Quiver& gamma = gp.gamma();
  for (const auto& [vertex, pick] : choice) {
    if (!gamma.vertex_index(vertex)) {
      throw GpValidationError("choice names unknown gamma vertex '" + vertex + "'");
    }
  }
  const OrdinaryQuiver oq = build_ordinary_quiver(gp);

  std::vector<std::size_t> picked;
  Subquiver sub;
  for (std::size_t i = 0; i < gamma.vertex_count(); ++i) {
    const Quiver& sigma = gp.algebra(i).quiver;
    const auto it = choice.find(gamma.vertices()[i]);
    std::string sigma_vertex;
    if (it != choice.end()) {
      sigma_vertex = it->second;
    } else if (sigma.vertex_count() == 1) {
      sigma_vertex = sigma.vertices().front();
    } else {
      throw GpValidationError("no vertex chosen for gamma vertex '" + gamma.vertices()[i] + "'");
    }
    if (!sigma.vertex_index(sigma_vertex)) {
      throw GpValidationError("'" + sigma_vertex + "' is not a vertex of the algebra at '" +
                              gamma.vertices()[i] + "'");
    }
    const std::string id = vertex_id(gp, i, sigma_vertex);
    picked.push_back(*oq.quiver.vertex_index(id));
    sub.vertices.push_back(id);
  }

  for (std::size_t g = 0; g < gamma.arrow_count(); ++g) {
    const std::size_t from = picked[gamma.source(g)];
    const std::size_t to = picked[gamma.target(g)];
    for (std::size_t a = 0; a < oq.quiver.arrow_count(); ++a) {
      const ArrowOrigin& origin = oq.arrow_origins[a];
      if (origin.type == ArrowType::TypeI && origin.block == g && oq.quiver.source(a) == from &&
          oq.quiver.target(a) == to) {
        sub.arrows.push_back(oq.quiver.arrows()[a].id);
        break;
      }
    }
  }
  return sub;
}

Quiver subquiver_of(const Quiver& q, const Subquiver& sub) {
  std::vector<Arrow> arrows;
  for (const auto& id : sub.arrows) {
    const auto index = q.arrow_index(id);
    if (!index) throw QuiverError("unknown arrow '" + id + "'");
    arrows.push_back(q.arrows()[*index]);
  }
  return Quiver(sub.vertices, std::move(arrows));
}

}  // namespace gpa

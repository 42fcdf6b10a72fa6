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

#include "gpa/typecheck.hpp"

#include <algorithm>
#include <stdexcept>

#include "gpa/errors.hpp"

namespace gpa {

std::string AlgebraPattern::to_string() const {
  switch (kind) {
    case Kind::K:
      return "k";
    case Kind::SemisimpleKm:
      return "k^" + std::to_string(m);
    case Kind::PathA2:
      return "kA2";
    case Kind::RadSquareZeroDouble:
      return "radical-square-zero double arrow";
    case Kind::Other:
      break;
  }
  return "other";
}

std::string Verdict::kind_name(Kind k) {
  switch (k) {
    case Kind::Finite:
      return "Finite";
    case Kind::StrictTame:
      return "StrictTame";
    case Kind::Wild:
      return "Wild";
    case Kind::OutOfScope:
      return "OutOfScope";
    case Kind::Indeterminate:
      break;
  }
  return "Indeterminate";
}

namespace {

MonomialIdeal two_cycle_ideal(const std::string& first, const std::string& second) {
  return MonomialIdeal({Path({first, second}), Path({second, first})});
}

}  // namespace

AlgebraPattern recognize_pattern(const BoundQuiver& bq) {
  using Kind = AlgebraPattern::Kind;
  const Quiver& q = bq.quiver;
  const std::size_t n = q.vertex_count();
  if (q.arrow_count() == 0) {
    if (n == 1) return {Kind::K, 1};
    if (n >= 2) return {Kind::SemisimpleKm, n};
    return {};
  }
  if (n != 2 || has_loops(q)) return {};
  if (q.arrow_count() == 1 && bq.ideal.empty()) return {Kind::PathA2, 0};
  if (q.arrow_count() == 2 && q.source(0) == q.target(1) && q.source(1) == q.target(0) &&
      bq.ideal.same_ideal(two_cycle_ideal(q.arrows()[0].id, q.arrows()[1].id))) {
    return {Kind::RadSquareZeroDouble, 0};
  }
  return {};
}

BIShape recognize_bi(const BoundQuiver& bq) {
  const Quiver& q = bq.quiver;
  if (q.vertex_count() != 3 || q.arrow_count() != 4 || has_loops(q)) return {};

  // The two-cycle: arrows x -> y and y -> x.
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (q.source(a) != q.target(b) || q.source(b) != q.target(a)) continue;
      const std::size_t x = q.source(a);
      const std::size_t y = q.target(a);
      const std::size_t c = 3 - x - y;
      std::vector<std::size_t> rest;
      for (std::size_t r = 0; r < 4; ++r) {
        if (r != a && r != b) rest.push_back(r);
      }
      const auto outgoing = [&](std::size_t r) { return q.source(r) == c; };
      const auto ends = [&](std::size_t r) { return outgoing(r) ? q.target(r) : q.source(r); };
      const bool out_shape = outgoing(rest[0]) && outgoing(rest[1]);
      const bool in_shape = q.target(rest[0]) == c && q.target(rest[1]) == c;
      const bool covers = ends(rest[0]) != ends(rest[1]) && ends(rest[0]) != c && ends(rest[1]) != c;
      if (!(out_shape || in_shape) || !covers) return {};

      const std::string& alpha = q.arrows()[a].id;
      const std::string& beta = q.arrows()[b].id;
      for (const Path& g : bq.ideal.generators()) {
        for (const auto& id : g.arrows) {
          if (id != alpha && id != beta) return {};
        }
      }
      const bool tame = bq.ideal.same_ideal(two_cycle_ideal(alpha, beta));
      return {out_shape ? BIShape::Kind::BI : BIShape::Kind::BIop, tame};
    }
  }
  return {};
}

Verdict tits_verdict(const Multigraph& g) {
  bool any_euclidean = false;
  for (const auto& component : g.components()) {
    const Definiteness d = definiteness(g.induced(component));
    if (d.semidefinite_corank(1)) {
      any_euclidean = true;
    } else if (!d.positive_definite()) {
      return {Verdict::Kind::Wild, 0, std::nullopt, "Tits form is indefinite on a component"};
    }
  }
  if (any_euclidean) {
    return {Verdict::Kind::StrictTame, 0, std::nullopt,
            "Tits form is positive semidefinite of corank 1 on a component"};
  }
  return {Verdict::Kind::Finite, indecomposable_count(g), std::nullopt,
          "Tits form is positive definite"};
}

namespace {

struct Placement {
  const Multigraph& graph;
  GraphClass cls;
  std::vector<AlgebraPattern> patterns;

  bool endpoint(std::size_t v) const { return graph.degree(v) == 1; }
  bool all_k() const {
    return std::all_of(patterns.begin(), patterns.end(), [](const auto& p) { return p.is_k(); });
  }
  // Indices whose algebra is not k.
  std::vector<std::size_t> enlarged() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < patterns.size(); ++v) {
      if (!patterns[v].is_k()) out.push_back(v);
    }
    return out;
  }
  bool is(GraphClass::Kind kind, DiagramFamily family) const {
    return cls.kind == kind && cls.family == family;
  }
};

// Finite clauses: Dynkin D/E with all k; A2 with k or one k^2 / k^3; A_n
// (n >= 3) with all k or a single k^2 on an endpoint.
bool finite_clause(const Placement& p, std::string& reason) {
  using K = GraphClass::Kind;
  if (!p.cls.is_dynkin()) return false;
  const auto big = p.enlarged();
  if (p.cls.family != DiagramFamily::A) {
    reason = "gamma is " + p.cls.to_string() + " and every attached algebra is k";
    return big.empty();
  }
  if (p.cls.index == 2) {
    if (big.empty()) {
      reason = "gamma is Dynkin A2 and both algebras are k";
      return true;
    }
    if (big.size() == 1 && (p.patterns[big[0]].is_km(2) || p.patterns[big[0]].is_km(3))) {
      reason = "gamma is Dynkin A2 with one algebra " + p.patterns[big[0]].to_string() + " and the other k";
      return true;
    }
    return false;
  }
  if (big.empty()) {
    reason = "gamma is " + p.cls.to_string() + " and every attached algebra is k";
    return true;
  }
  if (p.is(K::Dynkin, DiagramFamily::A) && big.size() == 1 && p.endpoint(big[0]) &&
      p.patterns[big[0]].is_km(2)) {
    reason = "gamma is " + p.cls.to_string() + " with k^2 on one endpoint and k elsewhere";
    return true;
  }
  return false;
}

bool tame_clause(const Placement& p, std::string& reason) {
  const auto big = p.enlarged();
  const auto& pat = p.patterns;
  if (p.cls.is_euclidean()) {
    reason = "gamma is " + p.cls.to_string() + " and every attached algebra is k";
    return big.empty();
  }
  if (!p.cls.is_dynkin()) return false;

  if (p.cls.family == DiagramFamily::D) {
    if (big.size() != 1 || !pat[big[0]].is_km(2) || !p.endpoint(big[0])) return false;
    const std::size_t v = big[0];
    if (p.cls.index == 4) {
      reason = "gamma is Dynkin D4 with k^2 on exactly one endpoint";
      return true;
    }
    // Tail endpoint: its neighbour is not the branch vertex.
    const std::size_t neighbour = p.graph.neighbors(v).front();
    if (p.graph.degree(neighbour) <= 2) {
      reason = "gamma is " + p.cls.to_string() + " with k^2 on the tail endpoint";
      return true;
    }
    return false;
  }
  if (p.cls.family != DiagramFamily::A) return false;

  const std::size_t n = p.cls.index;
  if (n == 2) {
    if (big.size() == 2 && pat[0].is_km(2) && pat[1].is_km(2)) {
      reason = "gamma is Dynkin A2 and both algebras are k^2";
      return true;
    }
    if (big.size() == 1) {
      const AlgebraPattern& other = pat[big[0]];
      if (other.is_km(4) || other.kind == AlgebraPattern::Kind::PathA2 ||
          other.kind == AlgebraPattern::Kind::RadSquareZeroDouble) {
        reason = "gamma is Dynkin A2 with one algebra k and the other " + other.to_string();
        return true;
      }
    }
    return false;
  }

  const auto endpoints_only = [&] {
    return std::all_of(big.begin(), big.end(), [&](std::size_t v) { return p.endpoint(v); });
  };
  const auto all_km = [&](std::size_t m) {
    return std::all_of(big.begin(), big.end(), [&](std::size_t v) { return pat[v].is_km(m); });
  };
  if (n == 3) {
    if (big.size() == 1 && !p.endpoint(big[0]) && pat[big[0]].is_km(2)) {
      reason = "gamma is Dynkin A3 with k^2 in the middle and k on both ends";
      return true;
    }
    if (big.size() == 2 && endpoints_only() && all_km(2)) {
      reason = "gamma is Dynkin A3 with k^2 on both ends and k in the middle";
      return true;
    }
    if (big.size() == 1 && p.endpoint(big[0]) && pat[big[0]].is_km(3)) {
      reason = "gamma is Dynkin A3 with k^3 on one end and k elsewhere";
      return true;
    }
    return false;
  }
  if (big.size() == 2 && endpoints_only() && all_km(2)) {
    reason = "gamma is " + p.cls.to_string() + " with k^2 on both endpoints and k elsewhere";
    return true;
  }
  return false;
}

Verdict single_vertex_type(const GpAlgebra& gp, const OrdinaryQuiver& oq) {
  const BoundQuiver& algebra = gp.algebra(0);
  if (algebra.ideal.empty()) {
    const Multigraph g = underlying_graph(algebra.quiver);
    bool any_euclidean = false;
    bool any_wild = false;
    for (const auto& component : g.components()) {
      const GraphClass cls = classify_graph(g.induced(component));
      any_euclidean = any_euclidean || cls.is_euclidean();
      any_wild = any_wild || cls.kind == GraphClass::Kind::Neither;
    }
    if (any_wild) {
      return {Verdict::Kind::Wild, 0, certificate_search(oq),
              "single-vertex gamma; the path algebra has a component that is neither Dynkin nor Euclidean"};
    }
    if (any_euclidean) {
      return {Verdict::Kind::StrictTame, 0, std::nullopt,
              "single-vertex gamma; the path algebra is Euclidean (or Dynkin) on every component"};
    }
    return {Verdict::Kind::Finite, indecomposable_count(g), std::nullopt,
            "single-vertex gamma; the path algebra is Dynkin on every component"};
  }
  const BIShape bi = recognize_bi(algebra);
  if (bi.kind != BIShape::Kind::NotBI) {
    const std::string shape = bi.kind == BIShape::Kind::BI ? "B_I" : "B_I^op";
    if (bi.tame) {
      return {Verdict::Kind::StrictTame, 0, std::nullopt,
              "single-vertex gamma; " + shape + " bound by both length-2 paths of the two-cycle"};
    }
    return {Verdict::Kind::Wild, 0, certificate_search(oq),
            "single-vertex gamma; " + shape + " whose ideal is not generated by both length-2 paths"};
  }
  return {Verdict::Kind::Indeterminate, 0, std::nullopt,
          "bound single-vertex algebra outside recognized patterns"};
}

}  // namespace

Verdict decide_type(const GpAlgebra& gp) {
  const OrdinaryQuiver oq = build_ordinary_quiver(gp);
  const Quiver& gamma = gp.gamma();
  for (std::size_t i = 0; i < gamma.vertex_count(); ++i) {
    if (has_loops(gp.algebra(i).quiver)) {
      return {Verdict::Kind::OutOfScope, 0, std::nullopt,
              "loops in the algebra at gamma vertex " + gamma.vertices()[i] +
                  "; the classification assumes loop-free ordinary quivers"};
    }
  }
  if (gamma.vertex_count() == 1) return single_vertex_type(gp, oq);

  const Multigraph g = underlying_graph(gamma);
  Placement placement{g, classify_graph(g), {}};
  for (const auto& algebra : gp.algebras()) placement.patterns.push_back(recognize_pattern(algebra));

  std::string finite_reason;
  std::string tame_reason;
  const bool finite = finite_clause(placement, finite_reason);
  const bool tame = tame_clause(placement, tame_reason);
  if (finite && tame) throw std::logic_error("finite and tame clauses both matched");

  if (finite) {
    return {Verdict::Kind::Finite, indecomposable_count(underlying_graph(oq.quiver)), std::nullopt,
            finite_reason};
  }
  if (tame) return {Verdict::Kind::StrictTame, 0, std::nullopt, tame_reason};

  std::string reason;
  if (placement.cls.kind == GraphClass::Kind::Neither) {
    reason = "underlying graph of gamma is Neither (not Dynkin or Euclidean)";
  } else {
    reason = "gamma is " + placement.cls.to_string() +
             " but the attached algebras match no finite or tame clause";
  }
  return {Verdict::Kind::Wild, 0, certificate_search(oq), reason};
}

namespace {

constexpr std::size_t kCertificateMaxVertices = 10;
constexpr std::size_t kCertificateSetBudget = 500000;

// Enumerates every connected vertex set of the given size exactly once
// (Wernicke's ESU scheme) and hands it to `visit` until it returns false.
template <typename Visit>
void connected_sets(const std::vector<std::vector<std::size_t>>& adj, std::size_t size, Visit&& visit) {
  const std::size_t n = adj.size();
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u : adj[v]) adjacent[v][u] = true;
  }
  std::vector<std::size_t> chosen;
  bool stop = false;

  // Neighbours of w above root that are neither chosen nor adjacent to a
  // chosen vertex.
  auto exclusive = [&](std::size_t w, std::size_t root) {
    std::vector<std::size_t> out;
    for (std::size_t u : adj[w]) {
      if (u <= root) continue;
      const bool touches = std::any_of(chosen.begin(), chosen.end(),
                                       [&](std::size_t c) { return c == u || adjacent[c][u]; });
      if (!touches) out.push_back(u);
    }
    return out;
  };

  auto extend = [&](auto&& self, std::vector<std::size_t> extension, std::size_t root) -> void {
    if (chosen.size() == size) {
      stop = !visit(chosen);
      return;
    }
    while (!extension.empty() && !stop) {
      const std::size_t w = extension.back();
      extension.pop_back();
      std::vector<std::size_t> next = extension;
      for (std::size_t u : exclusive(w, root)) next.push_back(u);
      chosen.push_back(w);
      self(self, std::move(next), root);
      chosen.pop_back();
    }
  };

  for (std::size_t root = 0; root < n && !stop; ++root) {
    chosen.assign(1, root);
    std::vector<std::size_t> extension;
    for (std::size_t u : adj[root]) {
      if (u > root) extension.push_back(u);
    }
    extend(extend, std::move(extension), root);
  }
}

}  // namespace

std::optional<Subquiver> certificate_search(const OrdinaryQuiver& oq) {
  const Quiver& q = oq.quiver;
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t s = q.source(a);
    const std::size_t t = q.target(a);
    if (s == t) continue;
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::size_t examined = 0;
  for (std::size_t size = 2; size <= std::min(kCertificateMaxVertices, n); ++size) {
    std::optional<std::vector<std::size_t>> best_set;
    std::vector<std::size_t> best_arrows;
    connected_sets(adj, size, [&](const std::vector<std::size_t>& chosen) {
      if (++examined > kCertificateSetBudget) return false;
      std::vector<std::size_t> set = chosen;
      std::sort(set.begin(), set.end());
      if (best_set && !(set < *best_set)) return true;

      std::vector<std::size_t> position(n, n);
      for (std::size_t i = 0; i < set.size(); ++i) position[set[i]] = i;
      std::vector<std::size_t> type_one;
      std::vector<std::size_t> type_two;
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (position[q.source(a)] == n || position[q.target(a)] == n) continue;
        if (q.source(a) == q.target(a)) continue;
        (oq.arrow_types[a] == ArrowType::TypeI ? type_one : type_two).push_back(a);
      }
      auto wild_with = [&](const std::vector<std::size_t>& arrows) {
        std::vector<Edge> edges;
        for (std::size_t a : arrows) edges.push_back({position[q.source(a)], position[q.target(a)]});
        const Multigraph g = Multigraph::with_indexed_vertices(set.size(), std::move(edges));
        return g.is_connected() && classify_graph(g).kind == GraphClass::Kind::Neither;
      };
      if (wild_with(type_one)) {
        best_set = set;
        best_arrows = type_one;
        return true;
      }
      for (std::size_t extra : type_two) {
        auto arrows = type_one;
        arrows.push_back(extra);
        std::sort(arrows.begin(), arrows.end());
        if (wild_with(arrows)) {
          best_set = set;
          best_arrows = arrows;
          return true;
        }
      }
      return true;
    });
    if (best_set) {
      Subquiver sub;
      for (std::size_t v : *best_set) sub.vertices.push_back(q.vertices()[v]);
      for (std::size_t a : best_arrows) sub.arrows.push_back(q.arrows()[a].id);
      return sub;
    }
    if (examined > kCertificateSetBudget) break;
  }
  return std::nullopt;
}

}  // namespace gpa

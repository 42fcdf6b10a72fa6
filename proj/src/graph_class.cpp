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

#include "gpa/graph_class.hpp"

#include <algorithm>

#include "gpa/errors.hpp"

namespace gpa {

std::string GraphClass::to_string() const {
  if (kind == Kind::Neither) return "Neither";
  std::string letter = family == DiagramFamily::A ? "A" : family == DiagramFamily::D ? "D" : "E";
  if (kind == Kind::Euclidean) return "Euclidean " + letter + "~" + std::to_string(index);
  return "Dynkin " + letter + std::to_string(index);
}

namespace {

bool is_tree(const Multigraph& g) {
  return g.is_connected() && !g.has_loops() && !g.has_parallel_edges() &&
         g.edge_count() + 1 == g.vertex_count();
}

// Number of edges from `from` along the arm entered through `first`, which
// ends at a leaf. Only valid inside a tree whose non-branch vertices have
// degree <= 2.
std::size_t arm_length(const Multigraph& g, std::size_t from, std::size_t first) {
  std::size_t length = 1;
  std::size_t previous = from;
  std::size_t current = first;
  while (g.degree(current) == 2) {
    const auto& nb = g.neighbors(current);
    const std::size_t next = nb[0] == previous ? nb[1] : nb[0];
    previous = current;
    current = next;
    ++length;
  }
  return length;
}

GraphClass classify_tree(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> branches;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) branches.push_back(v);
  }
  if (branches.empty()) return GraphClass::dynkin(DiagramFamily::A, n);

  if (branches.size() == 1) {
    const ArmProfile profile = arm_decomposition(g);
    const auto& arms = profile.arms;
    using V = std::vector<std::size_t>;
    if (arms.size() == 4) {
      return arms == V{1, 1, 1, 1} ? GraphClass::euclidean(DiagramFamily::D, 4)
                                   : GraphClass::neither();
    }
    if (arms.size() != 3) return GraphClass::neither();
    if (arms[0] == 1 && arms[1] == 1) return GraphClass::dynkin(DiagramFamily::D, arms[2] + 3);
    if (arms == V{1, 2, 2}) return GraphClass::dynkin(DiagramFamily::E, 6);
    if (arms == V{1, 2, 3}) return GraphClass::dynkin(DiagramFamily::E, 7);
    if (arms == V{1, 2, 4}) return GraphClass::dynkin(DiagramFamily::E, 8);
    if (arms == V{2, 2, 2}) return GraphClass::euclidean(DiagramFamily::E, 6);
    if (arms == V{1, 3, 3}) return GraphClass::euclidean(DiagramFamily::E, 7);
    if (arms == V{1, 2, 5}) return GraphClass::euclidean(DiagramFamily::E, 8);
    return GraphClass::neither();
  }

  if (branches.size() == 2) {
    // Two forks joined by a path: each branch vertex has degree 3 and two
    // leaf neighbours.
    for (std::size_t b : branches) {
      if (g.degree(b) != 3) return GraphClass::neither();
      const auto& nb = g.neighbors(b);
      const auto leaves = std::count_if(nb.begin(), nb.end(),
                                        [&](std::size_t w) { return g.degree(w) == 1; });
      if (leaves != 2) return GraphClass::neither();
    }
    return GraphClass::euclidean(DiagramFamily::D, n - 1);
  }
  return GraphClass::neither();
}

}  // namespace

ArmProfile arm_decomposition(const Multigraph& tree) {
  if (!is_tree(tree)) throw GraphError("arm decomposition needs a simple connected tree");
  ArmProfile profile;
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) < 3) continue;
    if (profile.branch) throw NotStarLike("more than one vertex of degree at least 3");
    profile.branch = v;
  }
  if (!profile.branch) {
    profile.arms.push_back(tree.edge_count());
    return profile;
  }
  for (std::size_t w : tree.neighbors(*profile.branch)) {
    profile.arms.push_back(arm_length(tree, *profile.branch, w));
  }
  std::sort(profile.arms.begin(), profile.arms.end());
  return profile;
}

GraphClass classify_graph(const Multigraph& g) {
  if (g.vertex_count() == 0) throw GraphError("empty graph");
  if (!g.is_connected()) throw GraphError("graph is disconnected");
  if (g.has_loops()) return GraphClass::neither();

  const std::size_t n = g.vertex_count();
  if (g.has_parallel_edges()) {
    const bool kronecker = n == 2 && g.edge_count() == 2;
    return kronecker ? GraphClass::euclidean(DiagramFamily::A, 1) : GraphClass::neither();
  }
  if (g.edge_count() >= n) {
    // Connected and simple with a cycle: only a bare cycle qualifies.
    bool cycle = g.edge_count() == n && n >= 3;
    for (std::size_t v = 0; cycle && v < n; ++v) cycle = g.degree(v) == 2;
    return cycle ? GraphClass::euclidean(DiagramFamily::A, n - 1) : GraphClass::neither();
  }
  return classify_tree(g);
}

}  // namespace gpa

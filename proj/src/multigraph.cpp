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

#include "gpa/multigraph.hpp"

#include <algorithm>
#include <set>

#include "gpa/errors.hpp"

namespace gpa {

Multigraph::Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const std::size_t n = vertices_.size();
  {
    std::set<std::string> seen;
    for (const auto& v : vertices_) {
      if (!seen.insert(v).second) throw GraphError("duplicate vertex '" + v + "'");
    }
  }
  degree_.assign(n, 0);
  neighbors_.assign(n, {});
  for (const Edge& e : edges_) {
    if (e.u >= n || e.v >= n) throw GraphError("edge endpoint out of range");
    degree_[e.u] += 1;
    degree_[e.v] += 1;
    neighbors_[e.u].push_back(e.v);
    if (e.u != e.v) neighbors_[e.v].push_back(e.u);
  }
  for (auto& adj : neighbors_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
}

Multigraph Multigraph::with_indexed_vertices(std::size_t n, std::vector<Edge> edges) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Multigraph(std::move(names), std::move(edges));
}

std::size_t Multigraph::multiplicity(std::size_t u, std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return (e.u == u && e.v == v) || (e.u == v && e.v == u);
  }));
}

bool Multigraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

bool Multigraph::has_parallel_edges() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& e : edges_) {
    if (!seen.insert(std::minmax(e.u, e.v)).second) return true;
  }
  return false;
}

std::vector<std::vector<std::size_t>> Multigraph::components() const {
  const std::size_t n = vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> result;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w : neighbors_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

bool Multigraph::is_connected() const {
  return vertex_count() > 0 && components().size() == 1;
}

Multigraph Multigraph::induced(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> position(vertex_count(), vertex_count());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    position[keep[i]] = i;
    names.push_back(vertices_[keep[i]]);
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (position[e.u] < keep.size() && position[e.v] < keep.size()) {
      kept.push_back({position[e.u], position[e.v]});
    }
  }
  return Multigraph(std::move(names), std::move(kept));
}

Multigraph Multigraph::relabeled(const std::vector<std::size_t>& perm) const {
  std::vector<std::string> names(vertex_count());
  for (std::size_t i = 0; i < vertex_count(); ++i) names[perm[i]] = vertices_[i];
  std::vector<Edge> moved;
  moved.reserve(edges_.size());
  for (const Edge& e : edges_) moved.push_back({perm[e.u], perm[e.v]});
  return Multigraph(std::move(names), std::move(moved));
}

}  // namespace gpa

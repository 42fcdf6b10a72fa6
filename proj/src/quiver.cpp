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

#include "gpa/quiver.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "gpa/errors.hpp"

namespace gpa {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second) {
      throw QuiverError("duplicate vertex id '" + vertices_[i] + "'");
    }
  }
  source_.reserve(arrows_.size());
  target_.reserve(arrows_.size());
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (!arrow_index_.emplace(a.id, i).second) {
      throw QuiverError("duplicate arrow id '" + a.id + "'");
    }
    const auto s = vertex_index(a.source);
    const auto t = vertex_index(a.target);
    if (!s || !t) {
      throw QuiverError("arrow '" + a.id + "' has an undeclared endpoint");
    }
    source_.push_back(*s);
    target_.push_back(*t);
  }
}

std::optional<std::size_t> Quiver::vertex_index(std::string_view id) const {
  const auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::arrow_index(std::string_view id) const {
  const auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

bool Path::contains_factor(const Path& factor) const {
  if (factor.is_trivial()) return false;
  return std::search(arrows.begin(), arrows.end(), factor.arrows.begin(), factor.arrows.end()) !=
         arrows.end();
}

std::string Path::to_string() const {
  if (is_trivial()) return "e_" + vertex;
  std::string out = arrows.front();
  for (std::size_t i = 1; i < arrows.size(); ++i) out += "*" + arrows[i];
  return out;
}

bool is_path_of(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return q.vertex_index(p.vertex).has_value();
  std::optional<std::size_t> previous;
  for (const auto& id : p.arrows) {
    const auto a = q.arrow_index(id);
    if (!a) return false;
    if (previous && q.target(*previous) != q.source(*a)) return false;
    previous = a;
  }
  return true;
}

MonomialIdeal MonomialIdeal::normalized() const {
  std::vector<Path> kept;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const Path& g = generators_[i];
    bool redundant = false;
    for (std::size_t j = 0; j < generators_.size() && !redundant; ++j) {
      if (i == j) continue;
      const Path& h = generators_[j];
      if (h == g) {
        redundant = j < i;  // keep the first copy
      } else if (g.contains_factor(h)) {
        redundant = true;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return MonomialIdeal(std::move(kept));
}

bool MonomialIdeal::same_ideal(const MonomialIdeal& other) const {
  auto a = normalized().generators_;
  auto b = other.normalized().generators_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

BoundQuiver field_algebra(std::string vertex) {
  return {Quiver({std::move(vertex)}, {}), {}};
}

BoundQuiver semisimple_algebra(std::size_t m, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back(prefix + std::to_string(i));
  return {Quiver(std::move(names), {}), {}};
}

Quiver opposite(const Quiver& q) {
  std::vector<Arrow> reversed;
  reversed.reserve(q.arrow_count());
  for (const Arrow& a : q.arrows()) reversed.push_back({a.id, a.target, a.source});
  return Quiver(q.vertices(), std::move(reversed));
}

BoundQuiver opposite(const BoundQuiver& bq) {
  std::vector<Path> gens;
  for (Path p : bq.ideal.generators()) {
    std::reverse(p.arrows.begin(), p.arrows.end());
    gens.push_back(std::move(p));
  }
  return {opposite(bq.quiver), MonomialIdeal(std::move(gens))};
}

Multigraph underlying_graph(const Quiver& q) {
  std::vector<Edge> edges;
  edges.reserve(q.arrow_count());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) edges.push_back({q.source(a), q.target(a)});
  return Multigraph(q.vertices(), std::move(edges));
}

bool has_loops(const Quiver& q) {
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    if (q.source(a) == q.target(a)) return true;
  }
  return false;
}

bool is_acyclic(const Quiver& q) {
  // Kahn's algorithm; loops keep their vertex's in-degree positive.
  std::vector<std::size_t> indegree(q.vertex_count(), 0);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) ++indegree[q.target(a)];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      if (q.source(a) == v && --indegree[q.target(a)] == 0) ready.push_back(q.target(a));
    }
  }
  return removed == q.vertex_count();
}

namespace {

// Aho-Corasick automaton over arrow indices. States are prefixes of
// generators; a state is dead once some suffix of the word read so far is a
// generator.
class FactorAutomaton {
 public:
  FactorAutomaton(std::size_t alphabet, const std::vector<std::vector<std::size_t>>& words)
      : alphabet_(alphabet) {
    add_state();
    for (const auto& word : words) {
      std::size_t s = 0;
      for (std::size_t symbol : word) {
        if (next_[s][symbol] == kNone) {
          const std::size_t fresh = add_state();
          next_[s][symbol] = fresh;
        }
        s = next_[s][symbol];
      }
      dead_[s] = true;
    }
    std::vector<std::size_t> fail(next_.size(), 0);
    std::deque<std::size_t> queue;
    for (std::size_t c = 0; c < alphabet_; ++c) {
      if (next_[0][c] == kNone) {
        next_[0][c] = 0;
      } else {
        fail[next_[0][c]] = 0;
        queue.push_back(next_[0][c]);
      }
    }
    while (!queue.empty()) {
      const std::size_t s = queue.front();
      queue.pop_front();
      dead_[s] = dead_[s] || dead_[fail[s]];
      for (std::size_t c = 0; c < alphabet_; ++c) {
        const std::size_t child = next_[s][c];
        if (child == kNone) {
          next_[s][c] = next_[fail[s]][c];
        } else {
          fail[child] = next_[fail[s]][c];
          queue.push_back(child);
        }
      }
    }
  }

  std::size_t state_count() const { return next_.size(); }
  std::size_t step(std::size_t state, std::size_t symbol) const { return next_[state][symbol]; }
  bool dead(std::size_t state) const { return dead_[state]; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t add_state() {
    next_.emplace_back(alphabet_, kNone);
    dead_.push_back(false);
    return next_.size() - 1;
  }

  std::size_t alphabet_;
  std::vector<std::vector<std::size_t>> next_;
  std::vector<bool> dead_;
};

std::vector<std::vector<std::size_t>> generator_indices(const BoundQuiver& bq) {
  std::vector<std::vector<std::size_t>> words;
  for (const Path& g : bq.ideal.generators()) {
    if (g.is_trivial()) {
      throw InvalidIdeal("trivial path " + g.to_string() + " cannot generate an admissible ideal");
    }
    if (!is_path_of(bq.quiver, g)) {
      throw InvalidIdeal("generator " + g.to_string() + " is not a path of the quiver");
    }
    std::vector<std::size_t> word;
    for (const auto& id : g.arrows) word.push_back(*bq.quiver.arrow_index(id));
    words.push_back(std::move(word));
  }
  return words;
}

// Product of the factor automaton with the arrow-composition graph. Node
// (state, vertex) records the automaton state after reading a path ending at
// vertex. Walks from (root, v) are exactly the surviving paths starting at v.
class SurvivorGraph {
 public:
  explicit SurvivorGraph(const BoundQuiver& bq)
      : quiver_(bq.quiver),
        automaton_(bq.quiver.arrow_count(), generator_indices(bq)),
        outgoing_(bq.quiver.vertex_count()) {
    for (std::size_t a = 0; a < quiver_.arrow_count(); ++a) outgoing_[quiver_.source(a)].push_back(a);
  }

  std::size_t node_count() const { return automaton_.state_count() * quiver_.vertex_count(); }
  std::size_t start(std::size_t vertex) const { return vertex; }

  // Successors as (arrow, node) pairs in arrow order.
  std::vector<std::pair<std::size_t, std::size_t>> successors(std::size_t node) const {
    const std::size_t n = quiver_.vertex_count();
    const std::size_t state = node / n;
    const std::size_t vertex = node % n;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a : outgoing_[vertex]) {
      const std::size_t next = automaton_.step(state, a);
      if (!automaton_.dead(next)) out.emplace_back(a, next * n + quiver_.target(a));
    }
    return out;
  }

  struct Search {
    std::vector<std::size_t> cycle;       // arrow indices; empty when acyclic
    std::vector<std::size_t> post_order;  // reachable nodes, successors first
  };

  // Depth-first search from every start node in vertex order.
  Search search() const {
    enum class Mark : unsigned char { White, Grey, Black };
    std::vector<Mark> mark(node_count(), Mark::White);
    Search result;
    struct Frame {
      std::size_t node;
      std::vector<std::pair<std::size_t, std::size_t>> succ;
      std::size_t next = 0;
      std::size_t via = 0;  // arrow used to enter this frame
    };
    for (std::size_t v = 0; v < quiver_.vertex_count(); ++v) {
      const std::size_t root = start(v);
      if (mark[root] != Mark::White) continue;
      std::vector<Frame> stack;
      stack.push_back({root, successors(root), 0, 0});
      mark[root] = Mark::Grey;
      while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next == top.succ.size()) {
          mark[top.node] = Mark::Black;
          result.post_order.push_back(top.node);
          stack.pop_back();
          continue;
        }
        const auto [arrow, child] = top.succ[top.next++];
        if (mark[child] == Mark::Grey) {
          std::size_t k = stack.size() - 1;
          while (stack[k].node != child) --k;
          for (std::size_t i = k + 1; i < stack.size(); ++i) result.cycle.push_back(stack[i].via);
          result.cycle.push_back(arrow);
          return result;
        }
        if (mark[child] == Mark::White) {
          mark[child] = Mark::Grey;
          stack.push_back({child, successors(child), 0, arrow});
        }
      }
    }
    return result;
  }

  const Quiver& quiver() const { return quiver_; }

 private:
  const Quiver& quiver_;
  FactorAutomaton automaton_;
  std::vector<std::vector<std::size_t>> outgoing_;
};

Path path_from_indices(const Quiver& q, const std::vector<std::size_t>& arrows) {
  std::vector<std::string> ids;
  ids.reserve(arrows.size());
  for (std::size_t a : arrows) ids.push_back(q.arrows()[a].id);
  return Path(std::move(ids));
}

}  // namespace

std::optional<std::vector<Path>> surviving_paths(const BoundQuiver& bq) {
  const SurvivorGraph graph(bq);
  if (!graph.search().cycle.empty()) return std::nullopt;

  const Quiver& q = bq.quiver;
  std::vector<std::vector<std::size_t>> words;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack{{graph.start(v), {}}};
    while (!stack.empty()) {
      auto [node, word] = std::move(stack.back());
      stack.pop_back();
      for (const auto& [arrow, child] : graph.successors(node)) {
        auto longer = word;
        longer.push_back(arrow);
        words.push_back(longer);
        stack.emplace_back(child, std::move(longer));
      }
    }
  }
  std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
    return std::forward_as_tuple(a.size(), a) < std::forward_as_tuple(b.size(), b);
  });

  std::vector<Path> result;
  result.reserve(q.vertex_count() + words.size());
  for (const auto& v : q.vertices()) result.push_back(Path::trivial(v));
  for (const auto& w : words) result.push_back(path_from_indices(q, w));
  return result;
}

std::optional<AdmissibilityError> check_admissible(const BoundQuiver& bq) {
  using Kind = AdmissibilityError::Kind;
  for (const Path& g : bq.ideal.generators()) {
    if (!g.is_trivial() && !is_path_of(bq.quiver, g)) {
      return AdmissibilityError{Kind::InvalidGenerator, g,
                                "generator " + g.to_string() + " is not a path of the quiver"};
    }
    if (g.length() < 2) {
      return AdmissibilityError{Kind::GeneratorTooShort, g,
                                "generator " + g.to_string() + " has length below 2"};
    }
  }
  const SurvivorGraph graph(bq);
  const auto search = graph.search();
  if (!search.cycle.empty()) {
    Path witness = path_from_indices(bq.quiver, search.cycle);
    return AdmissibilityError{Kind::InfiniteDimensional, witness,
                              "cycle " + witness.to_string() + " avoids every generator"};
  }
  return std::nullopt;
}

std::uint64_t dimension(const BoundQuiver& bq) {
  if (const auto error = check_admissible(bq)) throw AdmissibilityFailure(error->message);
  const SurvivorGraph graph(bq);
  const auto search = graph.search();
  // Walks starting at each node, counted over the acyclic product graph.
  std::vector<std::uint64_t> walks(graph.node_count(), 0);
  for (std::size_t node : search.post_order) {
    std::uint64_t total = 1;
    for (const auto& [arrow, child] : graph.successors(node)) total += walks[child];
    walks[node] = total;
  }
  std::uint64_t dim = 0;
  for (std::size_t v = 0; v < bq.quiver.vertex_count(); ++v) dim += walks[graph.start(v)];
  return dim;
}

}  // namespace gpa

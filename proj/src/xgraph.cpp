/*
Copyright 2026 The stallings Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "stallings/xgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <utility>

#include "stallings/error.hpp"

namespace stallings {

namespace {

constexpr Vertex kUnset = std::numeric_limits<Vertex>::max();

void build_csr(std::size_t keys, std::span<const Edge> edges, bool by_origin,
               std::size_t letters, std::vector<std::uint32_t>& start,
               std::vector<std::uint32_t>& index) {
  start.assign(keys + 1, 0);
  for (const auto& e : edges) {
    Vertex v = by_origin ? e.origin : e.terminus;
    ++start[v * letters + e.letter + 1];
  }
  std::partial_sum(start.begin(), start.end(), start.begin());
  index.assign(edges.size(), 0);
  std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    Vertex v = by_origin ? e.origin : e.terminus;
    index[fill[v * letters + e.letter]++] = i;
  }
}

void require_same_alphabet(const XGraph& a, const XGraph& b) {
  if (a.alphabet_ptr() != b.alphabet_ptr() && a.alphabet() != b.alphabet()) {
    throw AlphabetMismatch("graphs are labelled over different alphabets");
  }
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }
  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  std::vector<Vertex> parent_;
};

// Propagates s -> t along every edge of the connected graph g1. Returns the
// vertex map, or nothing on a conflict or a missing edge in g2.
std::optional<Morphism> propagate(const XGraph& g1, Vertex s, const XGraph& g2,
                                  Vertex t) {
  std::vector<Vertex> map(g1.vertex_count(), kUnset);
  std::deque<Vertex> queue{s};
  map[s] = t;
  const auto k = static_cast<std::uint32_t>(g1.letter_count());
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (std::uint32_t x = 0; x < k; ++x) {
      for (bool backwards : {false, true}) {
        auto edges = backwards ? g1.in_edges(u, x) : g1.out_edges(u, x);
        if (edges.empty()) continue;
        auto image = g2.step(map[u], Letter{x, backwards});
        if (!image) return std::nullopt;
        for (auto ei : edges) {
          const auto& e = g1.edges()[ei];
          Vertex w = backwards ? e.origin : e.terminus;
          if (map[w] == kUnset) {
            map[w] = *image;
            queue.push_back(w);
          } else if (map[w] != *image) {
            return std::nullopt;
          }
        }
      }
    }
  }
  if (std::find(map.begin(), map.end(), kUnset) != map.end()) {
    return std::nullopt;
  }
  return Morphism{std::move(map)};
}

bool is_bijective_onto(const Morphism& m, const XGraph& g1, const XGraph& g2) {
  if (g1.vertex_count() != g2.vertex_count() ||
      g1.edges().size() != g2.edges().size()) {
    return false;
  }
  std::vector<bool> hit(g2.vertex_count(), false);
  for (Vertex v : m.vertex_map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

XGraph::XGraph(std::shared_ptr<const Alphabet> alphabet,
               std::size_t vertex_count, std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)),
      vertex_count_(vertex_count),
      edges_(std::move(edges)) {
  if (!alphabet_) throw PreconditionError("graph needs an alphabet");
  for (const auto& e : edges_) {
    if (e.origin >= vertex_count_ || e.terminus >= vertex_count_) {
      throw PreconditionError("edge endpoint outside the vertex range");
    }
    if (e.letter >= alphabet_->size()) {
      throw AlphabetMismatch("edge letter outside the alphabet");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  std::size_t keys = vertex_count_ * alphabet_->size();
  build_csr(keys, edges_, true, alphabet_->size(), out_start_, out_index_);
  build_csr(keys, edges_, false, alphabet_->size(), in_start_, in_index_);
}

std::span<const std::uint32_t> XGraph::out_edges(Vertex v,
                                                 std::uint32_t x) const {
  std::size_t key = v * alphabet_->size() + x;
  return std::span<const std::uint32_t>(out_index_)
      .subspan(out_start_[key], out_start_[key + 1] - out_start_[key]);
}

std::span<const std::uint32_t> XGraph::in_edges(Vertex v,
                                                std::uint32_t x) const {
  std::size_t key = v * alphabet_->size() + x;
  return std::span<const std::uint32_t>(in_index_)
      .subspan(in_start_[key], in_start_[key + 1] - in_start_[key]);
}

std::optional<Vertex> XGraph::step(Vertex v, Letter l) const {
  if (l.index >= alphabet_->size()) {
    throw AlphabetMismatch("letter outside the graph's alphabet");
  }
  if (l.inverse) {
    auto in = in_edges(v, l.index);
    if (in.empty()) return std::nullopt;
    return edges_[in.front()].origin;
  }
  auto out = out_edges(v, l.index);
  if (out.empty()) return std::nullopt;
  return edges_[out.front()].terminus;
}

std::size_t XGraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (std::uint32_t x = 0; x < alphabet_->size(); ++x) {
    d += out_edges(v, x).size() + in_edges(v, x).size();
  }
  return d;
}

BasedXGraph::BasedXGraph(XGraph graph, Vertex base)
    : graph_(std::move(graph)), base_(base) {
  if (graph_.vertex_count() == 0) {
    throw PreconditionError("a based graph needs at least one vertex");
  }
  if (base_ >= graph_.vertex_count()) {
    throw PreconditionError("base vertex out of range");
  }
}

FoldResult fold(const XGraph& g) {
  const std::size_t n = g.vertex_count();
  UnionFind uf(n);
  // Per class root: letter -> some neighbour (any member of the class).
  std::vector<std::map<std::uint32_t, Vertex>> out(n), in(n);
  std::deque<std::pair<Vertex, Vertex>> pending;

  auto merge = [&](Vertex a, Vertex b) {
    a = uf.find(a);
    b = uf.find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // smaller id stays the root
    uf.parent_[b] = a;
    for (auto* side : {&out, &in}) {
      auto& keep = (*side)[a];
      for (auto [x, t] : (*side)[b]) {
        auto [it, inserted] = keep.emplace(x, t);
        if (!inserted) pending.emplace_back(it->second, t);
      }
      (*side)[b].clear();
    }
  };

  for (const auto& e : g.edges()) {
    Vertex ro = uf.find(e.origin);
    if (auto [it, ok] = out[ro].emplace(e.letter, e.terminus); !ok) {
      pending.emplace_back(it->second, e.terminus);
    }
    Vertex rt = uf.find(e.terminus);
    if (auto [it, ok] = in[rt].emplace(e.letter, e.origin); !ok) {
      pending.emplace_back(it->second, e.origin);
    }
    while (!pending.empty()) {
      auto [a, b] = pending.front();
      pending.pop_front();
      merge(a, b);
    }
  }

  std::vector<Vertex> id(n, kUnset);
  Vertex next = 0;
  Morphism quotient{std::vector<Vertex>(n)};
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = uf.find(v);
    if (id[r] == kUnset) id[r] = next++;
    quotient.vertex_map[v] = id[r];
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    edges.push_back({quotient.vertex_map[e.origin], e.letter,
                     quotient.vertex_map[e.terminus]});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {XGraph(g.alphabet_ptr(), next, std::move(edges)), std::move(quotient)};
}

BasedXGraph core(const BasedXGraph& based) {
  const XGraph& g = based.graph();
  const std::size_t n = g.vertex_count();
  const auto k = static_cast<std::uint32_t>(g.letter_count());

  // Base component first.
  std::vector<bool> keep(n, false);
  std::deque<Vertex> queue{based.base()};
  keep[based.base()] = true;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (std::uint32_t x = 0; x < k; ++x) {
      for (auto ei : g.out_edges(u, x)) {
        Vertex w = g.edges()[ei].terminus;
        if (!keep[w]) keep[w] = true, queue.push_back(w);
      }
      for (auto ei : g.in_edges(u, x)) {
        Vertex w = g.edges()[ei].origin;
        if (!keep[w]) keep[w] = true, queue.push_back(w);
      }
    }
  }

  std::vector<bool> edge_alive(g.edges().size(), true);
  std::vector<std::size_t> degree(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (keep[v]) degree[v] = g.degree(v);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (keep[v] && v != based.base() && degree[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (!keep[v]) continue;
    keep[v] = false;
    for (std::uint32_t x = 0; x < k; ++x) {
      for (bool backwards : {false, true}) {
        for (auto ei : backwards ? g.in_edges(v, x) : g.out_edges(v, x)) {
          if (!edge_alive[ei]) continue;
          edge_alive[ei] = false;
          const auto& e = g.edges()[ei];
          Vertex w = backwards ? e.origin : e.terminus;
          if (w == v) continue;
          if (--degree[w] <= 1 && keep[w] && w != based.base()) {
            queue.push_back(w);
          }
        }
      }
    }
  }

  std::vector<Vertex> id(n, kUnset);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (keep[v]) id[v] = next++;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    if (edge_alive[i] && keep[e.origin] && keep[e.terminus]) {
      edges.push_back({id[e.origin], e.letter, id[e.terminus]});
    }
  }
  return BasedXGraph(XGraph(g.alphabet_ptr(), next, std::move(edges)),
                     id[based.base()]);
}

bool is_folded(const XGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t x = 0; x < g.letter_count(); ++x) {
      if (g.out_edges(v, x).size() > 1 || g.in_edges(v, x).size() > 1) {
        return false;
      }
    }
  }
  return true;
}

bool is_regular(const XGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t x = 0; x < g.letter_count(); ++x) {
      if (g.out_edges(v, x).size() != 1 || g.in_edges(v, x).size() != 1) {
        return false;
      }
    }
  }
  return true;
}

bool is_connected(const XGraph& g) {
  if (g.vertex_count() == 0) return true;
  UnionFind uf(g.vertex_count());
  std::size_t components = g.vertex_count();
  for (const auto& e : g.edges()) {
    Vertex a = uf.find(e.origin);
    Vertex b = uf.find(e.terminus);
    if (a != b) {
      uf.parent_[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  return components == 1;
}

std::optional<Vertex> trace(const XGraph& g, Vertex from,
                            std::span<const Letter> w) {
  if (from >= g.vertex_count()) {
    throw PreconditionError("trace start vertex out of range");
  }
  Vertex v = from;
  for (Letter l : w) {
    auto next = g.step(v, l);
    if (!next) return std::nullopt;
    v = *next;
  }
  return v;
}

std::size_t SpanningTree::size() const {
  return static_cast<std::size_t>(std::count(in_tree.begin(), in_tree.end(), true));
}

SpanningTree spanning_tree(const BasedXGraph& based) {
  const XGraph& g = based.graph();
  const auto k = static_cast<std::uint32_t>(g.letter_count());
  SpanningTree tree;
  tree.in_tree.assign(g.edges().size(), false);
  tree.paths.assign(g.vertex_count(), Word{});
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue{based.base()};
  seen[based.base()] = true;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    tree.visit_order.push_back(u);
    for (std::uint32_t x = 0; x < k; ++x) {
      for (bool backwards : {false, true}) {
        for (auto ei : backwards ? g.in_edges(u, x) : g.out_edges(u, x)) {
          const auto& e = g.edges()[ei];
          Vertex w = backwards ? e.origin : e.terminus;
          if (seen[w]) continue;
          seen[w] = true;
          tree.in_tree[ei] = true;
          tree.paths[w] = tree.paths[u];
          tree.paths[w].push_back(Letter{x, backwards});
          queue.push_back(w);
        }
      }
    }
  }
  if (tree.visit_order.size() != g.vertex_count()) {
    throw PreconditionError("spanning tree requires a connected graph");
  }
  return tree;
}

BasedXGraph canonical(const BasedXGraph& based) {
  const XGraph& g = based.graph();
  std::vector<Vertex> order;
  if (is_connected(g)) {
    order = spanning_tree(based).visit_order;
  } else {
    // Visit the base component, then everything else in id order.
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<Vertex> queue{based.base()};
    seen[based.base()] = true;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (std::uint32_t x = 0; x < g.letter_count(); ++x) {
        for (bool backwards : {false, true}) {
          for (auto ei : backwards ? g.in_edges(u, x) : g.out_edges(u, x)) {
            const auto& e = g.edges()[ei];
            Vertex w = backwards ? e.origin : e.terminus;
            if (!seen[w]) seen[w] = true, queue.push_back(w);
          }
        }
      }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!seen[v]) order.push_back(v);
    }
  }
  std::vector<Vertex> id(g.vertex_count());
  for (Vertex i = 0; i < order.size(); ++i) id[order[i]] = i;
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    edges.push_back({id[e.origin], e.letter, id[e.terminus]});
  }
  return BasedXGraph(XGraph(g.alphabet_ptr(), g.vertex_count(), std::move(edges)),
                     0);
}

std::optional<Morphism> isomorphic_based(const BasedXGraph& g1,
                                         const BasedXGraph& g2) {
  require_same_alphabet(g1.graph(), g2.graph());
  if (g1.graph().vertex_count() != g2.graph().vertex_count() ||
      g1.graph().edges().size() != g2.graph().edges().size()) {
    return std::nullopt;
  }
  auto m = propagate(g1.graph(), g1.base(), g2.graph(), g2.base());
  if (m && is_bijective_onto(*m, g1.graph(), g2.graph())) return m;
  return std::nullopt;
}

std::optional<Morphism> isomorphic_unbased(const XGraph& g1, const XGraph& g2) {
  require_same_alphabet(g1, g2);
  if (g1.vertex_count() != g2.vertex_count() ||
      g1.edges().size() != g2.edges().size() || g1.vertex_count() == 0) {
    return std::nullopt;
  }
  for (Vertex t = 0; t < g2.vertex_count(); ++t) {
    auto m = propagate(g1, 0, g2, t);
    if (m && is_bijective_onto(*m, g1, g2)) return m;
  }
  return std::nullopt;
}

std::optional<Morphism> find_morphism(const BasedXGraph& src, const XGraph& dst) {
  require_same_alphabet(src.graph(), dst);
  for (Vertex t = 0; t < dst.vertex_count(); ++t) {
    if (auto m = propagate(src.graph(), src.base(), dst, t)) return m;
  }
  return std::nullopt;
}

XGraph restrict_to(const XGraph& g, std::span<const std::uint32_t> letters) {
  std::vector<std::string> names;
  std::vector<std::uint32_t> remap(g.letter_count(), kUnset);
  for (std::uint32_t i = 0; i < letters.size(); ++i) {
    names.push_back(g.alphabet().name(letters[i]));
    remap[letters[i]] = i;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (remap[e.letter] != kUnset) {
      edges.push_back({e.origin, remap[e.letter], e.terminus});
    }
  }
  return XGraph(Alphabet(std::move(names)), g.vertex_count(), std::move(edges));
}

XGraph bouquet(std::shared_ptr<const Alphabet> alphabet) {
  std::vector<Edge> edges;
  for (std::uint32_t x = 0; x < alphabet->size(); ++x) edges.push_back({0, x, 0});
  return XGraph(std::move(alphabet), 1, std::move(edges));
}

BasedXGraph stallings_graph(std::shared_ptr<const Alphabet> alphabet,
                            std::span<const Word> words) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (const auto& raw : words) {
    check_word(raw, *alphabet);
    Word w = free_reduce(raw);
    if (w.empty()) continue;
    Vertex at = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Vertex to = i + 1 == w.size() ? 0 : next++;
      if (w[i].inverse) {
        edges.push_back({to, w[i].index, at});
      } else {
        edges.push_back({at, w[i].index, to});
      }
      at = to;
    }
  }
  auto folded = fold(XGraph(std::move(alphabet), next, std::move(edges)));
  return core(BasedXGraph(std::move(folded.graph), folded.quotient.vertex_map[0]));
}

}  // namespace stallings

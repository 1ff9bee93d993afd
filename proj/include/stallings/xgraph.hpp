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

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "stallings/words.hpp"

namespace stallings {

using Vertex = std::uint32_t;

// A positive X-labelled edge. Its formal inverse is never stored: walking
// the edge backwards reads the inverse letter.
struct Edge {
  Vertex origin = 0;
  std::uint32_t letter = 0;
  Vertex terminus = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite directed multigraph with X-labelled edges. Immutable once built;
// edges are kept sorted so equal graphs compare equal.
class XGraph {
 public:
  XGraph(std::shared_ptr<const Alphabet> alphabet, std::size_t vertex_count,
         std::vector<Edge> edges);
  XGraph(const Alphabet& alphabet, std::size_t vertex_count,
         std::vector<Edge> edges)
      : XGraph(std::make_shared<const Alphabet>(alphabet), vertex_count,
               std::move(edges)) {}

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const noexcept {
    return alphabet_;
  }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t letter_count() const noexcept { return alphabet_->size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Indices into edges() of the x-edges leaving / entering v.
  std::span<const std::uint32_t> out_edges(Vertex v, std::uint32_t x) const;
  std::span<const std::uint32_t> in_edges(Vertex v, std::uint32_t x) const;

  // Follows the first edge labelled l from v (inverse letters walk edges
  // backwards). Deterministic on folded graphs.
  std::optional<Vertex> step(Vertex v, Letter l) const;

  // Number of edges of the doubled graph with origin v; a loop counts twice.
  std::size_t degree(Vertex v) const;

  friend bool operator==(const XGraph& a, const XGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ &&
           *a.alphabet_ == *b.alphabet_;
  }

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  // CSR indices keyed by v * |X| + x.
  std::vector<std::uint32_t> out_start_, out_index_;
  std::vector<std::uint32_t> in_start_, in_index_;
};

class BasedXGraph {
 public:
  BasedXGraph(XGraph graph, Vertex base);

  const XGraph& graph() const noexcept { return graph_; }
  Vertex base() const noexcept { return base_; }

  friend bool operator==(const BasedXGraph&, const BasedXGraph&) = default;

 private:
  XGraph graph_;
  Vertex base_;
};

// Label-preserving vertex map; edge images are implied for folded targets.
struct Morphism {
  std::vector<Vertex> vertex_map;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

struct FoldResult {
  XGraph graph;
  Morphism quotient;  // old vertex -> folded vertex
};

// Identifies same-label edges sharing an origin or a terminus until none
// remain. Folded vertices are numbered by the smallest old id they absorb,
// so an already folded graph comes back unchanged.
FoldResult fold(const XGraph& g);

// Union of the reduced loops at the base: the base component with every
// non-base vertex of degree one pruned repeatedly. Requires a folded graph.
BasedXGraph core(const BasedXGraph& g);

bool is_folded(const XGraph& g);
bool is_regular(const XGraph& g);
bool is_connected(const XGraph& g);

// End point of the path labelled w starting at `from`, or nothing if the
// path leaves the graph. Requires a folded graph.
std::optional<Vertex> trace(const XGraph& g, Vertex from,
                            std::span<const Letter> w);

struct SpanningTree {
  std::vector<bool> in_tree;         // per edge index
  std::vector<Word> paths;           // tree path label from the base
  std::vector<Vertex> visit_order;   // BFS order, base first
  std::size_t size() const;          // number of tree edges
};

// Breadth-first tree from the base; at each vertex edges are examined by
// letter index, positive direction before inverse, then by edge index.
SpanningTree spanning_tree(const BasedXGraph& g);

// Renumbers vertices in spanning-tree visit order (base becomes 0).
// Vertices outside the base component follow in their old order.
BasedXGraph canonical(const BasedXGraph& g);

std::optional<Morphism> isomorphic_based(const BasedXGraph& g1,
                                         const BasedXGraph& g2);
std::optional<Morphism> isomorphic_unbased(const XGraph& g1, const XGraph& g2);

// A morphism sending src's base anywhere in dst; candidate images are tried
// in ascending vertex order.
std::optional<Morphism> find_morphism(const BasedXGraph& src, const XGraph& dst);

// The subgraph on edges whose letter is listed, over the sub-alphabet in the
// listed order. Vertices are kept.
XGraph restrict_to(const XGraph& g, std::span<const std::uint32_t> letters);

// One vertex with a loop per letter.
XGraph bouquet(std::shared_ptr<const Alphabet> alphabet);

// Folded core graph of <words> <= F(X), built from a bouquet of petals.
BasedXGraph stallings_graph(std::shared_ptr<const Alphabet> alphabet,
                            std::span<const Word> words);

}  // namespace stallings

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

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "stallings/words.hpp"
#include "stallings/xgraph.hpp"

namespace stallings {

inline constexpr std::size_t kDefaultMaxCosets = 10000;

struct FulfillmentWitness {
  Vertex vertex = 0;
  std::size_t relator = 0;  // index into the presentation's relators
  Vertex terminus = 0;
};

// First (vertex, relator) pair whose trace does not close, scanning vertices
// then relators in order. Throws PreconditionError on a non-regular graph.
std::optional<FulfillmentWitness> find_unfulfilled(const XGraph& g,
                                                   const Presentation& p);
bool fulfills(const XGraph& g, const Presentation& p);

// Right action of each generator and its inverse on the vertices.
class CosetTable {
 public:
  CosetTable() = default;
  explicit CosetTable(const XGraph& regular);

  std::size_t size() const noexcept { return rows_; }
  Vertex act(Vertex v, Letter l) const {
    return cells_[v * columns_ + 2 * l.index + (l.inverse ? 1 : 0)];
  }
  Vertex act(Vertex v, std::span<const Letter> w) const {
    for (Letter l : w) v = act(v, l);
    return v;
  }
  // The permutation v -> v.x as a vector indexed by v.
  std::vector<Vertex> column(std::uint32_t x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t columns_ = 0;
  std::vector<Vertex> cells_;
};

// Γ_{X,R}(H) for a finite-index H of G = <X | R>: a connected X-regular
// graph fulfilling R, based at the coset H.
class SubgroupGraph {
 public:
  // Throws PreconditionError naming the first failed condition.
  SubgroupGraph(BasedXGraph graph, std::shared_ptr<const Presentation> p);
  SubgroupGraph(BasedXGraph graph, const Presentation& p)
      : SubgroupGraph(std::move(graph), std::make_shared<const Presentation>(p)) {}

  const Presentation& presentation() const noexcept { return *presentation_; }
  const std::shared_ptr<const Presentation>& presentation_ptr() const noexcept {
    return presentation_;
  }
  const BasedXGraph& based() const noexcept { return graph_; }
  const XGraph& graph() const noexcept { return graph_.graph(); }
  Vertex base() const noexcept { return graph_.base(); }
  const CosetTable& table() const noexcept { return table_; }
  // Label of the spanning-tree path from the base to each vertex.
  std::span<const Word> coset_reps() const noexcept { return reps_; }
  std::size_t index() const noexcept { return graph().vertex_count(); }

 private:
  BasedXGraph graph_;
  std::shared_ptr<const Presentation> presentation_;
  CosetTable table_;
  std::vector<Word> reps_;
};

inline SubgroupGraph subgroup_from_graph(BasedXGraph g, const Presentation& p) {
  return SubgroupGraph(std::move(g), p);
}

// Schreier coset graph of <subgens> by HLT enumeration, vertices numbered
// breadth-first from the base. Throws CosetLimitExceeded when more than
// max_cosets cosets are alive at once or the definitions run past a fixed
// multiple of the bound.
SubgroupGraph coset_enumerate(const Presentation& p,
                              std::span<const Word> subgens,
                              std::size_t max_cosets = kDefaultMaxCosets);
SubgroupGraph coset_enumerate(std::shared_ptr<const Presentation> p,
                              std::span<const Word> subgens,
                              std::size_t max_cosets = kDefaultMaxCosets);

inline std::size_t index(const SubgroupGraph& sg) { return sg.index(); }

bool contains(const SubgroupGraph& sg, std::span<const Letter> w);

// Y_T for the breadth-first spanning tree: one word per positive non-tree
// edge, freely reduced. Works on any connected based graph.
std::vector<Word> free_basis(const BasedXGraph& g);
std::vector<Word> free_basis(const SubgroupGraph& sg);
// The same words, read as generators of the image of L in G.
std::vector<Word> generators(const SubgroupGraph& sg);

// g with H1 = g H2 g^-1, or nothing when the subgroups are not conjugate.
std::optional<Word> conjugate(const SubgroupGraph& sg1, const SubgroupGraph& sg2);

bool is_normal(const SubgroupGraph& sg);

struct Normalizer {
  std::vector<Vertex> vertices;  // v with (Γ, base) ≅ (Γ, v)
  std::vector<Word> reps;        // g_v for those vertices
  SubgroupGraph graph;
};

Normalizer normalizer(const SubgroupGraph& sg);

// Throws PreconditionError unless both sides share one presentation.
void require_same_presentation(const SubgroupGraph& a, const SubgroupGraph& b);

}  // namespace stallings

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

#include "stallings/products.hpp"

#include <algorithm>
#include <numeric>

#include "stallings/error.hpp"

namespace stallings {

ProductGraph::ProductGraph(SubgroupGraph left, SubgroupGraph right)
    : left_(std::move(left)),
      right_(std::move(right)),
      graph_(left_.presentation().alphabet_ptr(), 0, {}) {
  require_same_presentation(left_, right_);
  const std::size_t n1 = left_.index(), n2 = right_.index();
  const auto k = static_cast<std::uint32_t>(left_.graph().letter_count());
  std::vector<Edge> edges;
  edges.reserve(n1 * n2 * k);
  component_.resize(n1 * n2);
  std::iota(component_.begin(), component_.end(), Vertex{0});
  auto find = [this](Vertex v) {
    while (component_[v] != v) v = component_[v] = component_[component_[v]];
    return v;
  };
  for (Vertex u = 0; u < n1; ++u) {
    for (Vertex v = 0; v < n2; ++v) {
      for (std::uint32_t x = 0; x < k; ++x) {
        Vertex from = pair(u, v);
        Vertex to = pair(left_.table().act(u, gen(x)), right_.table().act(v, gen(x)));
        edges.push_back({from, x, to});
        Vertex a = find(from), b = find(to);
        if (a != b) component_[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  for (Vertex p = 0; p < component_.size(); ++p) component_[p] = find(p);
  graph_ = XGraph(left_.presentation().alphabet_ptr(), n1 * n2, std::move(edges));
}

std::size_t ProductGraph::component_size(Vertex p) const {
  return static_cast<std::size_t>(
      std::count(component_.begin(), component_.end(), component_[p]));
}

ProductGraph product(const SubgroupGraph& sg1, const SubgroupGraph& sg2) {
  return ProductGraph(sg1, sg2);
}

SubgroupGraph intersect(const SubgroupGraph& sg1, const SubgroupGraph& sg2) {
  ProductGraph pg(sg1, sg2);
  std::vector<Vertex> id(pg.graph().vertex_count(),
                         std::numeric_limits<Vertex>::max());
  Vertex next = 0;
  for (Vertex p = 0; p < id.size(); ++p) {
    if (pg.in_base_component(p)) id[p] = next++;
  }
  std::vector<Edge> edges;
  for (const auto& e : pg.graph().edges()) {
    if (id[e.origin] != std::numeric_limits<Vertex>::max()) {
      edges.push_back({id[e.origin], e.letter, id[e.terminus]});
    }
  }
  BasedXGraph component(XGraph(pg.graph().alphabet_ptr(), next, std::move(edges)),
                        id[pg.base()]);
  return SubgroupGraph(canonical(component), sg1.presentation_ptr());
}

std::optional<Word> coset_meet(const ProductGraph& pg, Vertex v, Vertex v2) {
  if (v >= pg.left().index() || v2 >= pg.right().index()) {
    throw PreconditionError("coset vertex out of range");
  }
  Vertex target = pg.pair(v, v2);
  if (!pg.in_base_component(target)) return std::nullopt;
  // Breadth-first search inside the base component, same tie order as the
  // spanning trees elsewhere.
  const auto k = static_cast<std::uint32_t>(pg.graph().letter_count());
  std::vector<Vertex> parent(pg.graph().vertex_count(),
                             std::numeric_limits<Vertex>::max());
  std::vector<Letter> via(parent.size());
  std::vector<Vertex> queue{pg.base()};
  parent[pg.base()] = pg.base();
  for (std::size_t i = 0; i < queue.size() && parent[target] == std::numeric_limits<Vertex>::max(); ++i) {
    Vertex u = queue[i];
    auto [a, b] = pg.split(u);
    for (std::uint32_t x = 0; x < k; ++x) {
      for (Letter l : {gen(x), inv(x)}) {
        Vertex w = pg.pair(pg.left().table().act(a, l), pg.right().table().act(b, l));
        if (parent[w] != std::numeric_limits<Vertex>::max()) continue;
        parent[w] = u;
        via[w] = l;
        queue.push_back(w);
      }
    }
  }
  Word path;
  for (Vertex p = target; p != pg.base(); p = parent[p]) path.push_back(via[p]);
  return Word(path.rbegin(), path.rend());
}

bool is_malnormal(const SubgroupGraph& sg, std::size_t group_order) {
  if (group_order == 0 || group_order % sg.index() != 0) {
    throw PreconditionError("group order " + std::to_string(group_order) +
                            " is not a multiple of the index " +
                            std::to_string(sg.index()));
  }
  ProductGraph pg(sg, sg);
  for (Vertex p = 0; p < pg.graph().vertex_count(); ++p) {
    if (pg.components()[p] != p) continue;  // visit each component once
    if (pg.in_base_component(p)) continue;
    if (pg.component_size(p) != group_order) return false;
  }
  return true;
}

}  // namespace stallings

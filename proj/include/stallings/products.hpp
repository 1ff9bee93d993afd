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
#include <optional>
#include <utility>
#include <vector>

#include "stallings/subgroup.hpp"

namespace stallings {

// Γ(H) × Γ(K) on pair vertices u * |V(K)| + v, with connected components.
class ProductGraph {
 public:
  ProductGraph(SubgroupGraph left, SubgroupGraph right);

  const SubgroupGraph& left() const noexcept { return left_; }
  const SubgroupGraph& right() const noexcept { return right_; }
  const XGraph& graph() const noexcept { return graph_; }

  Vertex pair(Vertex u, Vertex v) const {
    return u * static_cast<Vertex>(right_.index()) + v;
  }
  std::pair<Vertex, Vertex> split(Vertex p) const {
    auto n = static_cast<Vertex>(right_.index());
    return {p / n, p % n};
  }
  Vertex base() const { return pair(left_.base(), right_.base()); }

  // Component label per pair vertex; labels are the smallest member id.
  std::span<const Vertex> components() const noexcept { return component_; }
  std::size_t component_size(Vertex p) const;
  bool in_base_component(Vertex p) const {
    return component_[p] == component_[base()];
  }

 private:
  SubgroupGraph left_;
  SubgroupGraph right_;
  XGraph graph_;
  std::vector<Vertex> component_;
};

ProductGraph product(const SubgroupGraph& sg1, const SubgroupGraph& sg2);

// Subgroup graph of H ∩ K: the base component, renumbered breadth-first.
SubgroupGraph intersect(const SubgroupGraph& sg1, const SubgroupGraph& sg2);

// g with H g_v ∩ K g_v' = (H ∩ K) g, or nothing when the cosets are disjoint.
// v and v' are vertex ids of the left and right graphs.
std::optional<Word> coset_meet(const ProductGraph& pg, Vertex v, Vertex v2);

// Requires a finite ambient group of the given order; throws
// PreconditionError when the order is not a multiple of the index.
bool is_malnormal(const SubgroupGraph& sg, std::size_t group_order);

}  // namespace stallings

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

#include "stallings/subgroup.hpp"

#include <algorithm>

#include "stallings/error.hpp"

namespace stallings {

CosetTable::CosetTable(const XGraph& g)
    : rows_(g.vertex_count()), columns_(2 * g.letter_count()) {
  cells_.resize(rows_ * columns_);
  for (Vertex v = 0; v < rows_; ++v) {
    for (std::uint32_t x = 0; x < g.letter_count(); ++x) {
      cells_[v * columns_ + 2 * x] = *g.step(v, gen(x));
      cells_[v * columns_ + 2 * x + 1] = *g.step(v, inv(x));
    }
  }
}

std::vector<Vertex> CosetTable::column(std::uint32_t x) const {
  std::vector<Vertex> out(rows_);
  for (Vertex v = 0; v < rows_; ++v) out[v] = act(v, gen(x));
  return out;
}

std::optional<FulfillmentWitness> find_unfulfilled(const XGraph& g,
                                                   const Presentation& p) {
  if (g.alphabet() != p.alphabet()) {
    throw AlphabetMismatch("graph and presentation use different alphabets");
  }
  if (!is_regular(g)) {
    throw PreconditionError("fulfillment is defined for regular graphs only");
  }
  CosetTable t(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      Vertex end = t.act(v, p.relators()[i]);
      if (end != v) return FulfillmentWitness{v, i, end};
    }
  }
  return std::nullopt;
}

bool fulfills(const XGraph& g, const Presentation& p) {
  return !find_unfulfilled(g, p).has_value();
}

SubgroupGraph::SubgroupGraph(BasedXGraph graph,
                             std::shared_ptr<const Presentation> p)
    : graph_(std::move(graph)), presentation_(std::move(p)) {
  const XGraph& g = graph_.graph();
  if (g.alphabet() != presentation_->alphabet()) {
    throw AlphabetMismatch("graph and presentation use different alphabets");
  }
  if (!is_connected(g)) throw PreconditionError("subgroup graph is not connected");
  if (!is_regular(g)) throw PreconditionError("subgroup graph is not X-regular");
  if (auto bad = find_unfulfilled(g, *presentation_)) {
    throw PreconditionError(
        "relator " +
        format_word(presentation_->relators()[bad->relator],
                    presentation_->alphabet()) +
        " does not close at vertex " + std::to_string(bad->vertex));
  }
  table_ = CosetTable(g);
  reps_ = spanning_tree(graph_).paths;
}

void require_same_presentation(const SubgroupGraph& a, const SubgroupGraph& b) {
  if (a.presentation_ptr() != b.presentation_ptr() &&
      a.presentation() != b.presentation()) {
    throw PreconditionError("subgroup graphs belong to different presentations");
  }
}

bool contains(const SubgroupGraph& sg, std::span<const Letter> w) {
  check_word(w, sg.presentation().alphabet());
  Word r = free_reduce(w);
  return sg.table().act(sg.base(), r) == sg.base();
}

std::vector<Word> free_basis(const BasedXGraph& based) {
  const XGraph& g = based.graph();
  SpanningTree tree = spanning_tree(based);
  std::vector<Word> out;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (tree.in_tree[i]) continue;
    const Edge& e = g.edges()[i];
    Word w = tree.paths[e.origin];
    w.push_back(gen(e.letter));
    Word back = inverse(tree.paths[e.terminus]);
    w.insert(w.end(), back.begin(), back.end());
    out.push_back(free_reduce(w));
  }
  return out;
}

std::vector<Word> free_basis(const SubgroupGraph& sg) {
  return free_basis(sg.based());
}

std::vector<Word> generators(const SubgroupGraph& sg) { return free_basis(sg); }

std::optional<Word> conjugate(const SubgroupGraph& sg1,
                              const SubgroupGraph& sg2) {
  require_same_presentation(sg1, sg2);
  auto sigma = isomorphic_unbased(sg1.graph(), sg2.graph());
  if (!sigma) return std::nullopt;
  const auto& map = sigma->vertex_map;
  auto it = std::find(map.begin(), map.end(), sg2.base());
  return sg1.coset_reps()[static_cast<std::size_t>(it - map.begin())];
}

namespace {

std::vector<Vertex> self_image_vertices(const SubgroupGraph& sg) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < sg.index(); ++v) {
    if (isomorphic_based(sg.based(), BasedXGraph(sg.graph(), v))) {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

bool is_normal(const SubgroupGraph& sg) {
  return self_image_vertices(sg).size() == sg.index();
}

Normalizer normalizer(const SubgroupGraph& sg) {
  auto vertices = self_image_vertices(sg);
  std::vector<Word> reps;
  std::vector<Word> gens = generators(sg);
  for (Vertex v : vertices) {
    reps.push_back(sg.coset_reps()[v]);
    gens.push_back(sg.coset_reps()[v]);
  }
  auto graph = coset_enumerate(sg.presentation_ptr(), gens,
                               std::max(kDefaultMaxCosets, sg.index()));
  return {std::move(vertices), std::move(reps), std::move(graph)};
}

}  // namespace stallings

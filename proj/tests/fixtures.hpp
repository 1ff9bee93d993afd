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

// Presentations and hand-built graphs shared by the tests.

#include <memory>
#include <string>
#include <vector>

#include "stallings/io.hpp"
#include "stallings/subgroup.hpp"
#include "stallings/words.hpp"
#include "stallings/xgraph.hpp"

namespace fixtures {

using namespace stallings;

inline Word W(const Alphabet& a, const std::string& s) { return parse_word(s, a); }

inline std::vector<Word> Ws(const Alphabet& a, std::initializer_list<const char*> ss) {
  std::vector<Word> out;
  for (const char* s : ss) out.push_back(W(a, s));
  return out;
}

inline Presentation pres(std::vector<std::string> gens,
                         std::initializer_list<const char*> rels) {
  Alphabet a(std::move(gens));
  return Presentation(a, Ws(a, rels));
}

inline Presentation s3() { return pres({"s1", "s2"}, {"s1^2", "s2^2", "(s1 s2)^3"}); }
inline Presentation d3() { return pres({"a", "b"}, {"a^3", "b^2", "(ab)^2"}); }
inline Presentation xy_s3() { return pres({"x", "y"}, {"x^2", "y^2", "(xy)^3"}); }
inline Presentation delta333() {
  return pres({"a", "b", "c"}, {"a^2", "b^2", "c^2", "(ab)^3", "(bc)^3", "(ca)^3"});
}
inline Presentation quaternion() { return pres({"a", "b"}, {"a^4", "a^2 b^-2", "b^-1 a b a"}); }
inline Presentation free_ab() { return pres({"a", "b"}, {}); }

// Finite groups of order <= 24 with their orders.
struct FiniteGroup {
  std::string name;
  Presentation presentation;
  std::size_t order;
};

inline std::vector<FiniteGroup> finite_corpus() {
  return {
      {"S3", s3(), 6},
      {"D3", d3(), 6},
      {"Z6", pres({"a"}, {"a^6"}), 6},
      {"Z2xZ2", pres({"a", "b"}, {"a^2", "b^2", "abAB"}), 4},
      {"Q8", quaternion(), 8},
      {"D4", pres({"r", "s"}, {"r^4", "s^2", "(r s)^2"}), 8},
      {"Z2xZ4", pres({"a", "b"}, {"a^2", "b^4", "abAB"}), 8},
      {"A4", pres({"a", "b"}, {"a^2", "b^3", "(ab)^3"}), 12},
      {"S4", pres({"a", "b"}, {"a^2", "b^3", "(ab)^4"}), 24},
  };
}

inline XGraph graph(const Alphabet& a, std::size_t n,
                    std::initializer_list<std::tuple<Vertex, const char*, Vertex>> es) {
  std::vector<Edge> edges;
  for (auto [u, x, v] : es) edges.push_back({u, *a.index_of(x), v});
  return XGraph(a, n, std::move(edges));
}

// Fulfillment example, left graph: v1, v2, v3 = 0, 1, 2.
inline XGraph fulfil_gamma() {
  return graph(Alphabet({"x", "y"}), 3,
               {{0, "x", 1}, {1, "x", 0}, {2, "x", 2}, {1, "y", 2}, {2, "y", 1}, {0, "y", 0}});
}

// Fulfillment example, right graph: u1..u4 = 0..3.
inline XGraph fulfil_gamma_prime() {
  return graph(Alphabet({"x", "y"}), 4,
               {{0, "x", 1}, {1, "x", 2}, {2, "x", 3}, {3, "x", 0},
                {0, "y", 3}, {3, "y", 1}, {1, "y", 0}, {2, "y", 2}});
}

// S3: the index-3 graph of <s1> on v1, v2, v3 = 0, 1, 2.
inline XGraph s3_index3() {
  return graph(Alphabet({"s1", "s2"}), 3,
               {{0, "s1", 0}, {0, "s2", 1}, {1, "s2", 0}, {1, "s1", 2}, {2, "s1", 1},
                {2, "s2", 2}});
}

// S3: the index-2 graph of A3.
inline XGraph s3_index2() {
  return graph(Alphabet({"s1", "s2"}), 2,
               {{0, "s1", 1}, {1, "s1", 0}, {0, "s2", 1}, {1, "s2", 0}});
}

// D3: the index-2 graph of <a>.
inline XGraph d3_index2() {
  return graph(Alphabet({"a", "b"}), 2, {{0, "a", 0}, {1, "a", 1}, {0, "b", 1}, {1, "b", 0}});
}

// Six-vertex graph over {a, b, c, d} on v1..v6 = 0..5, base v1.
inline BasedXGraph basis_graph() {
  return BasedXGraph(
      graph(Alphabet({"a", "b", "c", "d"}), 6,
            {{0, "b", 1}, {1, "b", 2}, {1, "a", 4}, {0, "a", 3}, {5, "a", 1},
             {3, "a", 0}, {4, "b", 0}, {4, "c", 0}, {2, "d", 3}, {5, "d", 5}}),
      0);
}

inline std::vector<std::string> basis_words() {
  return {"bab", "bac", "a^2", "b^2 d a^-1", "b a^-1 d a b^-1"};
}

// u, v, w = 0, 1, 2 with a hanging y-edge at w.
inline BasedXGraph hanging_graph() {
  return BasedXGraph(graph(Alphabet({"x", "y"}), 3, {{0, "x", 1}, {1, "x", 0}, {2, "y", 1}}), 0);
}

inline std::shared_ptr<const Presentation> share(Presentation p) {
  return std::make_shared<const Presentation>(std::move(p));
}

}  // namespace fixtures

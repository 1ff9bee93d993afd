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

#include "stallings/gammafam.hpp"

#include <numeric>
#include <string>

#include "stallings/error.hpp"
#include "stallings/products.hpp"

namespace stallings {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  for (; e; e >>= 1) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
  }
  return r;
}

GammaPCertificate certify(XGraph g, std::shared_ptr<const Presentation> p,
                          Word w, bool order_unchecked) {
  if (auto bad = find_unfulfilled(g, *p)) {
    throw FulfillmentFailed(
        "relator " + format_word(p->relators()[bad->relator], p->alphabet()) +
        " does not close at vertex " + std::to_string(bad->vertex) +
        " (ends at " + std::to_string(bad->terminus) + ")");
  }
  SubgroupGraph sg(BasedXGraph(std::move(g), 0), std::move(p));
  auto reach = verify_reachability(sg.based(), w);
  if (!reach.ok) {
    throw SpecInvalid("powers of " + format_word(w, sg.presentation().alphabet()) +
                      " do not visit every vertex exactly once");
  }
  GammaPCertificate cert{std::move(sg), std::move(w), 0, true, true,
                         order_unchecked};
  cert.prime = cert.graph.index();
  return cert;
}

// Adds a loop for every letter that has no edge at a vertex yet. Valid for
// graphs that are regular on the letters they use at each vertex.
void complete_with_loops(std::size_t vertices, std::size_t letters,
                         std::vector<Edge>& edges) {
  std::vector<bool> has(vertices * letters, false);
  for (const auto& e : edges) has[e.origin * letters + e.letter] = true;
  for (Vertex v = 0; v < vertices; ++v) {
    for (std::uint32_t x = 0; x < letters; ++x) {
      if (!has[v * letters + x]) edges.push_back({v, x, v});
    }
  }
}

struct Piece {
  XGraph graph;  // over the combined alphabet
  Vertex base;
  Word word;
};

// Alternating copies L, R, L, R, ... (pair_count of each). Each copy's base
// is glued to the previous copy's exit, the w-translate of its base.
XGraph chain(const std::shared_ptr<const Alphabet>& alphabet, const Piece& left,
             const Piece& right, std::uint64_t pair_count) {
  std::vector<Edge> edges;
  Vertex next = 1, glue = 0;
  for (std::uint64_t j = 0; j < 2 * pair_count; ++j) {
    const Piece& piece = j % 2 == 0 ? left : right;
    std::vector<Vertex> map(piece.graph.vertex_count());
    for (Vertex v = 0; v < map.size(); ++v) {
      map[v] = v == piece.base ? glue : next++;
    }
    for (const auto& e : piece.graph.edges()) {
      edges.push_back({map[e.origin], e.letter, map[e.terminus]});
    }
    glue = map[*trace(piece.graph, piece.base, piece.word)];
  }
  complete_with_loops(next, alphabet->size(), edges);
  return XGraph(alphabet, next, std::move(edges));
}

XGraph circle(const std::shared_ptr<const Alphabet>& alphabet,
              std::uint32_t letter, std::uint32_t length) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < length; ++v) edges.push_back({v, letter, (v + 1) % length});
  return XGraph(alphabet, length, std::move(edges));
}

XGraph shifted_into(const std::shared_ptr<const Alphabet>& alphabet,
                    const XGraph& g, std::uint32_t offset) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    edges.push_back({e.origin, e.letter + offset, e.terminus});
  }
  return XGraph(alphabet, g.vertex_count(), std::move(edges));
}

void check_factor(const GluingFactor& f, const char* side) {
  if (f.graph.index() < 2) {
    throw SpecInvalid(std::string(side) + " subgroup must be proper");
  }
  check_word(f.word, f.graph.presentation().alphabet());
  if (!verify_reachability(f.graph.based(), f.word).ok) {
    throw SpecInvalid(std::string("powers of the ") + side +
                      " word are not a full set of coset representatives");
  }
}

GammaPCertificate glue(const GluingSpec& spec,
                       std::shared_ptr<const Presentation> combined) {
  check_factor(spec.left, "left");
  check_factor(spec.right, "right");
  if (spec.pair_count == 0) throw PreconditionError("pair_count must be >= 1");
  const auto& alphabet = combined->alphabet_ptr();
  auto offset = static_cast<std::uint32_t>(
      spec.left.graph.presentation().alphabet().size());
  Piece left{shifted_into(alphabet, spec.left.graph.graph(), 0),
             spec.left.graph.base(), spec.left.word};
  Word w2 = shift_letters(spec.right.word, offset);
  Piece right{shifted_into(alphabet, spec.right.graph.graph(), offset),
              spec.right.graph.base(), w2};
  Word w = concat(spec.left.word, w2);
  return certify(chain(alphabet, left, right, spec.pair_count), std::move(combined),
                 std::move(w), false);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> admissible_primes(std::uint64_t step,
                                             std::size_t count) {
  if (step == 0) throw PreconditionError("chain step must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 1; out.size() < count; ++c) {
    if (is_prime(step * c + 1)) out.push_back(step * c + 1);
  }
  return out;
}

Reachability verify_reachability(const BasedXGraph& g, std::span<const Letter> w) {
  if (!is_regular(g.graph())) {
    throw PreconditionError("reachability is checked on regular graphs only");
  }
  check_word(w, g.graph().alphabet());
  const std::size_t n = g.graph().vertex_count();
  Reachability r;
  std::vector<bool> seen(n, false);
  Vertex v = g.base();
  r.ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[v]) r.ok = false;
    seen[v] = true;
    r.orbit.push_back(v);
    v = *trace(g.graph(), v, w);
  }
  r.ok = r.ok && v == g.base();
  return r;
}

GammaPCertificate build_type1(const Presentation& p, std::uint32_t letter,
                              std::uint64_t vertices) {
  if (vertices == 0) throw PreconditionError("circle length must be >= 1");
  if (letter >= p.alphabet().size()) throw AlphabetMismatch("letter out of range");
  auto pres = std::make_shared<const Presentation>(p);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < vertices; ++v) {
    edges.push_back({v, letter, static_cast<Vertex>((v + 1) % vertices)});
  }
  complete_with_loops(vertices, p.alphabet().size(), edges);
  XGraph g(pres->alphabet_ptr(), vertices, std::move(edges));
  return certify(std::move(g), pres, Word{gen(letter)}, true);
}

GammaPCertificate build_artin(const Presentation& p, std::uint64_t vertices) {
  if (vertices == 0) throw PreconditionError("circle length must be >= 1");
  auto pres = std::make_shared<const Presentation>(p);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < vertices; ++v) {
    for (std::uint32_t x = 0; x < p.alphabet().size(); ++x) {
      edges.push_back({v, x, static_cast<Vertex>((v + 1) % vertices)});
    }
  }
  XGraph g(pres->alphabet_ptr(), vertices, std::move(edges));
  return certify(std::move(g), pres, Word{gen(0)}, true);
}

GammaPCertificate build_type2(const Presentation& p, std::uint32_t a,
                              std::uint32_t k, std::uint32_t b, std::uint32_t l,
                              std::uint64_t pair_count) {
  if (k < 2 || l < 2) throw PreconditionError("circle lengths must be >= 2");
  if (a == b) throw PreconditionError("the two circle letters must differ");
  if (a >= p.alphabet().size() || b >= p.alphabet().size()) {
    throw AlphabetMismatch("letter out of range");
  }
  if (pair_count == 0) throw PreconditionError("pair_count must be >= 1");
  auto pres = std::make_shared<const Presentation>(p);
  const auto& alphabet = pres->alphabet_ptr();
  Piece left{circle(alphabet, a, k), 0, Word{gen(a)}};
  Piece right{circle(alphabet, b, l), 0, Word{gen(b)}};
  return certify(chain(alphabet, left, right, pair_count), pres,
                 Word{gen(a), gen(b)}, false);
}

GammaPCertificate extend_with_loops(const GammaPCertificate& cert,
                                    const Alphabet& extra,
                                    std::vector<Word> new_relators) {
  const Presentation& old = cert.graph.presentation();
  auto pres = std::make_shared<const Presentation>(
      combine(old, Presentation(extra, {}), std::move(new_relators)));
  const XGraph& g = cert.graph.graph();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t x = 0; x < extra.size(); ++x) {
      edges.push_back({v, static_cast<std::uint32_t>(old.alphabet().size()) + x, v});
    }
  }
  XGraph extended(pres->alphabet_ptr(), g.vertex_count(), std::move(edges));
  if (cert.graph.base() != 0) {
    throw PreconditionError("certificates are based at vertex 0");
  }
  return certify(std::move(extended), pres, cert.word,
                 cert.order_hypothesis_unchecked);
}

GammaPCertificate build_glued(const GluingSpec& spec) {
  return glue(spec, std::make_shared<const Presentation>(combine(
                        spec.left.graph.presentation(),
                        spec.right.graph.presentation())));
}

GammaPCertificate build_amalgam(
    const GluingSpec& spec,
    const std::vector<std::pair<Word, Word>>& identifications) {
  const Presentation& p1 = spec.left.graph.presentation();
  const Presentation& p2 = spec.right.graph.presentation();
  auto offset = static_cast<std::uint32_t>(p1.alphabet().size());
  std::vector<Word> extra;
  for (const auto& [d, psi] : identifications) {
    if (!contains(spec.left.graph, d)) {
      throw SpecInvalid(format_word(d, p1.alphabet()) +
                        " is not in the left subgroup");
    }
    if (!contains(spec.right.graph, psi)) {
      throw SpecInvalid(format_word(psi, p2.alphabet()) +
                        " is not in the right subgroup");
    }
    extra.push_back(free_reduce(concat(d, inverse(shift_letters(psi, offset)))));
  }
  return glue(spec, std::make_shared<const Presentation>(
                        combine(p1, p2, std::move(extra))));
}

bool verify_coprime_certificate(const GammaPCertificate& cert,
                                const SubgroupGraph& other, std::uint64_t m) {
  require_same_presentation(other, cert.graph);
  if (m == 0) throw PreconditionError("m must be positive");
  if (std::gcd(m, cert.prime) != 1) {
    throw PreconditionError("m = " + std::to_string(m) + " and p = " +
                            std::to_string(cert.prime) + " are not coprime");
  }
  if (!contains(other, power(cert.word, static_cast<long long>(m)))) {
    throw PreconditionError("w^" + std::to_string(m) +
                            " is not in the given subgroup");
  }
  ProductGraph pg(other, cert.graph);
  for (Vertex v = 0; v < other.index(); ++v) {
    if (!pg.in_base_component(pg.pair(v, cert.graph.base()))) return false;
  }
  return true;
}

}  // namespace stallings

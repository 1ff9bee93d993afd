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

// One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <string>

#include "catalog.hpp"
#include "fixtures.hpp"
#include "oracle/cayley.hpp"
#include "stallings/enumerator.hpp"
#include "stallings/error.hpp"
#include "stallings/products.hpp"

using namespace stallings;
using fixtures::W;

namespace {

// Failure detail, or empty on success.
using Check = std::function<std::string()>;

std::vector<std::size_t> counts(const Presentation& p, EnumerationMode mode) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back(enumerate_graphs({p, n, mode}).size());
  return out;
}

std::string catalog_counts(const Presentation& p) {
  const std::vector<std::size_t> based{1, 1, 3, 0, 0, 1}, unbased{1, 1, 1, 0, 0, 1};
  if (counts(p, EnumerationMode::based) != based) return "based counts";
  if (counts(p, EnumerationMode::unbased) != unbased) return "unbased counts";
  return "";
}

std::vector<SubgroupGraph> all_subgroups(const Presentation& p, std::size_t order) {
  std::vector<SubgroupGraph> out;
  for (std::size_t n = 1; n <= order; ++n) {
    if (order % n) continue;
    for (auto& sg : enumerate_graphs({p, n})) out.push_back(sg);
  }
  return out;
}

std::string s3_catalog() {
  auto p = fixtures::s3();
  if (auto e = catalog_counts(p); !e.empty()) return e;
  // The three based graphs on three vertices are <s1>, <s1 s2 s1>, <s2>:
  // each order-2 subgroup has index 3, so containing the involution suffices.
  std::set<std::string> seen;
  for (const auto& sg : enumerate_graphs({p, 3})) {
    for (const char* g : {"s1", "s1 s2 s1", "s2"}) {
      if (contains(sg, W(p.alphabet(), g))) seen.insert(g);
    }
  }
  return seen.size() == 3 ? "" : "index-3 languages";
}

std::string d3_catalog() {
  auto p = fixtures::d3();
  if (auto e = catalog_counts(p); !e.empty()) return e;
  auto graphs = enumerate_graphs({p, 2});
  if (graphs.size() != 1) return "index-2 graph";
  // Group elements are vertices of the regular representation.
  auto regular = coset_enumerate(p, std::vector<Word>{});
  std::set<Vertex> images;
  for (const auto& b : free_basis(graphs[0])) images.insert(*trace(regular.graph(), 0, b));
  std::set<Vertex> expected;
  for (const char* g : {"a", "a^2", "1"}) expected.insert(*trace(regular.graph(), 0, W(p.alphabet(), g)));
  if (images != expected) return "basis images";
  auto a = coset_enumerate(p, fixtures::Ws(p.alphabet(), {"a"}));
  return isomorphic_based(a.based(), graphs[0].based()) ? "" : "subgroup is not <a>";
}

std::string free_basis_words() {
  BasedXGraph g = fixtures::basis_graph();
  auto basis = free_basis(g);
  if (basis.size() != 5) return "basis size";
  const auto& alphabet = g.graph().alphabet_ptr();
  std::vector<Word> listed;
  for (const auto& s : fixtures::basis_words()) listed.push_back(W(*alphabet, s));
  auto ours = stallings_graph(alphabet, basis);
  auto theirs = stallings_graph(alphabet, listed);
  for (const auto& w : listed) {
    if (trace(ours.graph(), ours.base(), w) != ours.base()) return "listed word missing";
  }
  for (const auto& w : basis) {
    if (trace(theirs.graph(), theirs.base(), w) != theirs.base()) return "basis word missing";
  }
  return "";
}

std::string triangle_intersection() {
  auto p = fixtures::delta333();
  const Alphabet& a = p.alphabet();
  auto h = coset_enumerate(p, fixtures::Ws(a, {"a", "cbc", "cab"}));
  auto k = coset_enumerate(p, fixtures::Ws(a, {"b", "aca", "abc"}));
  if (h.index() != 3 || k.index() != 3) return "factor index";
  auto hk = intersect(h, k);
  if (hk.index() != 6 || !is_normal(hk)) return "intersection";
  auto pg = product(h, k);
  auto at = [&](const SubgroupGraph& sg, const char* g) { return *trace(sg.graph(), sg.base(), W(a, g)); };
  struct Meet {
    const char *left, *right, *word;
  };
  for (auto m : {Meet{"1", "1", "1"}, Meet{"1", "a", "a"}, Meet{"b", "1", "b"}, Meet{"c", "c", "c"},
                 Meet{"b", "c", "ab"}, Meet{"c", "a", "ba"}}) {
    auto g = coset_meet(pg, at(h, m.left), at(k, m.right));
    if (!g) return std::string("H") + m.left + " meets K" + m.right;
    if (trace(pg.graph(), pg.base(), *g) != trace(pg.graph(), pg.base(), W(a, m.word))) {
      return std::string("coset of H") + m.left + " ∩ K" + m.right;
    }
  }
  if (coset_meet(pg, at(h, "b"), at(k, "c")) != W(a, "ab")) return "Hb ∩ Kc word";
  for (auto [l, r] : {std::pair{"1", "c"}, std::pair{"c", "1"}, std::pair{"b", "a"}}) {
    if (coset_meet(pg, at(h, l), at(k, r))) return std::string("H") + l + " ∩ K" + r + " nonempty";
  }
  return "";
}

std::string malnormality() {
  auto p = fixtures::s3();
  if (!is_malnormal(coset_enumerate(p, fixtures::Ws(p.alphabet(), {"s1"})), 6)) return "<s1>";
  if (is_malnormal(coset_enumerate(p, fixtures::Ws(p.alphabet(), {"s1 s2"})), 6)) return "A3";
  for (const auto& q : {fixtures::s3(), fixtures::d3()}) {
    for (const auto& sg : all_subgroups(q, 6)) {
      std::size_t n = sg.index();
      if (is_malnormal(sg, 6) && (n * n - n) % 6 != 0) return "divisibility";
    }
  }
  return "";
}

std::string hall() {
  auto p = fixtures::s3();
  oracle::CayleyOracle o(p);
  for (std::size_t d : {1, 2, 3, 6}) {
    auto sg = hall_search(p, 6, d);
    if (!sg) return "no witness for d = " + std::to_string(d);
    if (oracle::count(o.members(*sg)) != d) return "wrong order for d = " + std::to_string(d);
  }
  auto q = fixtures::quaternion();
  auto whole = hall_search(q, 8, 8);
  if (!whole || whole->index() != 1) return "quaternion d = 8";
  for (std::size_t d : {2, 4}) {
    try {
      hall_search(q, 8, d);
      return "quaternion accepted d = " + std::to_string(d);
    } catch (const PreconditionError&) {
    }
  }
  return "";
}

std::string certificates() {
  for (const auto& f : catalog::required()) {
    for (auto p : admissible_primes(f.step, 3)) {
      if (!is_prime(p) || (p - 1) % f.step != 0) return f.name + ": admissible prime";
      auto e = catalog::check(f.build(p), f.presentation, p);
      if (!e.empty()) return f.name + " p = " + std::to_string(p) + ": " + e;
    }
  }
  return "";
}

std::string glued_chain() {
  auto left = fixtures::delta333();
  auto right = fixtures::pres({"d"}, {"d^2"});
  GluingSpec spec{{coset_enumerate(left, fixtures::Ws(left.alphabet(), {"b", "c", "abcba"})),
                   W(left.alphabet(), "abc")},
                  {coset_enumerate(right, std::vector<Word>{}), W(right.alphabet(), "d")},
                  3};
  auto cert = build_glued(spec);
  return catalog::check(cert, combine(left, right), 13);
}

std::string coprime() {
  catalog::CoprimeSampler sampler(20260101);
  for (int i = 0; i < 100; ++i) {
    auto inst = sampler.next();
    if (!verify_coprime_certificate(inst.cert, inst.other, inst.m)) {
      return inst.family + " m = " + std::to_string(inst.m) + " p = " + std::to_string(inst.cert.prime);
    }
  }
  return "";
}

std::string oracle_equivalence() {
  for (const auto& g : fixtures::finite_corpus()) {
    oracle::CayleyOracle o(g.presentation);
    if (o.order() != g.order) return g.name + ": order";
    std::set<oracle::CayleyOracle::Set> found;
    std::size_t emitted = 0;
    for (std::size_t n = 1; n <= g.order; ++n) {
      for (const auto& sg : enumerate_graphs({g.presentation, n})) {
        ++emitted;
        found.insert(o.members(sg));
      }
    }
    if (found.size() != emitted) return g.name + ": duplicate subgroup";
    if (found != o.all_subgroups()) return g.name + ": subgroup sets differ";
  }
  return "";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double seconds;
    Check check;
  };
  std::vector<Criterion> criteria{
      {"S3 catalog", 1, s3_catalog},
      {"D3 catalog", 1, d3_catalog},
      {"free basis", 1, free_basis_words},
      {"triangle group intersection", 1, triangle_intersection},
      {"malnormality", 1, malnormality},
      {"Hall search", 5, hall},
      {"Gamma_p certificates", 10, certificates},
      {"glued graph", 1, glued_chain},
      {"coprimality", 30, coprime},
      {"oracle equivalence", 60, oracle_equivalence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = criteria[i].check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && took > criteria[i].seconds) detail = "too slow";
    std::cout << "criterion " << i + 1 << " (" << criteria[i].name << "): "
              << (detail.empty() ? "PASS" : "FAIL") << " [" << took << " s]";
    if (!detail.empty()) std::cout << " " << detail;
    std::cout << "\n";
    failures += !detail.empty();
  }
  return failures ? 1 : 0;
}

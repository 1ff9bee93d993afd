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
#include <cstdint>
#include <utility>
#include <vector>

#include "stallings/subgroup.hpp"

namespace stallings {

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// The `count` smallest primes of the form step * c + 1 with c >= 1 (for
// step = 1: the smallest primes >= 2).
std::vector<std::uint64_t> admissible_primes(std::uint64_t step,
                                             std::size_t count);

struct Reachability {
  bool ok = false;
  std::vector<Vertex> orbit;  // base, base.w, base.w^2, ... (|V| entries)
};

// True iff base, base.w, ..., base.w^{|V|-1} are pairwise distinct and
// base.w^{|V|} = base. Requires an X-regular graph.
Reachability verify_reachability(const BasedXGraph& g, std::span<const Letter> w);

struct GammaPCertificate {
  SubgroupGraph graph;
  Word word;
  std::uint64_t prime = 0;  // vertex count; prime when used as Γ_p
  bool reachability_ok = false;
  bool fulfills_ok = false;
  // The Type I builder cannot check that its letter has infinite order.
  bool order_hypothesis_unchecked = false;
};

// (letter, p)-circle with a loop for every other generator at every vertex,
// w = letter.
GammaPCertificate build_type1(const Presentation& p, std::uint32_t letter,
                              std::uint64_t vertices);

// Parallel circles: every generator advances one step around the same
// p-cycle, w = the first generator. Fits Artin and pure braid relators.
GammaPCertificate build_artin(const Presentation& p, std::uint64_t vertices);

// Alternating chain of `pair_count` (a,k)- and (b,l)-circles, w = a b, on
// (k + l - 2) * pair_count + 1 vertices.
GammaPCertificate build_type2(const Presentation& p, std::uint32_t a,
                              std::uint32_t k, std::uint32_t b, std::uint32_t l,
                              std::uint64_t pair_count);

// Adds the letters of `extra` as loops at every vertex and re-verifies against
// <X, extra | R, new_relators>; new relators are words over the combined
// alphabet.
GammaPCertificate extend_with_loops(const GammaPCertificate& cert,
                                    const Alphabet& extra,
                                    std::vector<Word> new_relators);

struct GluingFactor {
  SubgroupGraph graph;
  Word word;  // its powers from the base visit every coset once
};

struct GluingSpec {
  GluingFactor left;
  GluingFactor right;
  std::uint64_t pair_count = 1;
};

// Chain of pair_count copies of each factor graph over <X1 u X2 | R1 u R2>,
// w = w1 w2, on (n1 + n2 - 2) * pair_count + 1 vertices.
GammaPCertificate build_glued(const GluingSpec& spec);

// As build_glued over <X1 u X2 | R1 u R2 u {d psi(d)^-1}>; each d must lie in
// H1 and each psi(d) in H2 (words over the factor alphabets).
GammaPCertificate build_amalgam(
    const GluingSpec& spec,
    const std::vector<std::pair<Word, Word>>& identifications);

// Checks that every coset H g of `other` meets H_p: all pair vertices
// (v, base of cert) lie in the base component of Γ(H) × Γ_p. Requires w^m in
// H and gcd(m, p) = 1.
bool verify_coprime_certificate(const GammaPCertificate& cert,
                                const SubgroupGraph& other, std::uint64_t m);

}  // namespace stallings

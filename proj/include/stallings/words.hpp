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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stallings {

// Ordered set of generator names. The order is fixed at construction and
// drives every tie-break downstream (letter index, then sign).
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::span<const std::string> names() const noexcept { return names_; }
  std::optional<std::uint32_t> index_of(std::string_view name) const;

  // True when every name is a single lowercase ASCII letter, which enables
  // the compact word syntax (uppercase = inverse).
  bool is_compact() const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

// A generator or its formal inverse. Ordering is (index, positive first),
// the global tie-break order.
struct Letter {
  std::uint32_t index = 0;
  bool inverse = false;

  constexpr Letter inverted() const noexcept { return {index, !inverse}; }
  constexpr int sign() const noexcept { return inverse ? -1 : 1; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter gen(std::uint32_t i) noexcept { return {i, false}; }
constexpr Letter inv(std::uint32_t i) noexcept { return {i, true}; }

// A word over X and its formal inverses. Not required to be reduced.
using Word = std::vector<Letter>;

Word free_reduce(std::span<const Letter> w);
Word cyclic_reduce(std::span<const Letter> w);
bool is_freely_reduced(std::span<const Letter> w) noexcept;

// Unreduced concatenation; callers reduce explicitly.
Word concat(std::span<const Letter> u, std::span<const Letter> v);
Word inverse(std::span<const Letter> w);
// w^k, unreduced; negative k uses the inverse, k = 0 gives the empty word.
Word power(std::span<const Letter> w, long long k);

// Throws AlphabetMismatch if a letter index is outside the alphabet.
void check_word(std::span<const Letter> w, const Alphabet& alphabet);

// Spaced rendering, e.g. "a b^-1 a^2"; the empty word renders as "1".
std::string format_word(std::span<const Letter> w, const Alphabet& alphabet);

// G = <X | R> with finitely many relators, stored freely reduced and
// non-empty.
class Presentation {
 public:
  Presentation(Alphabet alphabet, std::vector<Word> relators);

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const noexcept {
    return alphabet_;
  }
  std::span<const Word> relators() const noexcept { return relators_; }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return *a.alphabet_ == *b.alphabet_ && a.relators_ == b.relators_;
  }

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  std::vector<Word> relators_;
};

// <X1 u X2 | R1 u R2 u extra>, with X2 letters shifted past X1. The extra
// relators are words over the combined alphabet. Throws on name clashes.
Presentation combine(const Presentation& left, const Presentation& right,
                     std::vector<Word> extra = {});

// Moves every letter of a word over a right factor past the left factor.
Word shift_letters(std::span<const Letter> w, std::uint32_t offset);

}  // namespace stallings

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

#include "stallings/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "stallings/error.hpp"

namespace stallings {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto first = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(first) || s.front() == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw PreconditionError("alphabet must not be empty");
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) {
      throw PreconditionError("invalid generator name '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw PreconditionError("duplicate generator name '" + n + "'");
    }
  }
}

std::optional<std::uint32_t> Alphabet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - names_.begin());
}

bool Alphabet::is_compact() const noexcept {
  return std::all_of(names_.begin(), names_.end(), [](const std::string& n) {
    return n.size() == 1 && n[0] >= 'a' && n[0] <= 'z';
  });
}

Word free_reduce(std::span<const Letter> w) {
  // Stack-based cancellation; the result is the unique reduced form.
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(std::span<const Letter> w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo),
              r.begin() + static_cast<std::ptrdiff_t>(hi));
}

bool is_freely_reduced(std::span<const Letter> w) noexcept {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1].inverted()) return false;
  }
  return true;
}

Word concat(std::span<const Letter> u, std::span<const Letter> v) {
  Word out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word inverse(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Word power(std::span<const Letter> w, long long k) {
  Word base = k < 0 ? inverse(w) : Word(w.begin(), w.end());
  unsigned long long n = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Word out;
  out.reserve(base.size() * n);
  for (unsigned long long i = 0; i < n; ++i) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return out;
}

void check_word(std::span<const Letter> w, const Alphabet& alphabet) {
  for (Letter l : w) {
    if (l.index >= alphabet.size()) {
      throw AlphabetMismatch("letter index " + std::to_string(l.index) +
                             " outside alphabet of size " +
                             std::to_string(alphabet.size()));
    }
  }
}

std::string format_word(std::span<const Letter> w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long run = static_cast<long long>(j - i) * w[i].sign();
    if (!first) out << ' ';
    first = false;
    out << alphabet.name(w[i].index);
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

Presentation::Presentation(Alphabet alphabet, std::vector<Word> relators)
    : alphabet_(std::make_shared<const Alphabet>(std::move(alphabet))) {
  relators_.reserve(relators.size());
  for (const auto& r : relators) {
    check_word(r, *alphabet_);
    Word reduced = free_reduce(r);
    if (reduced.empty()) {
      throw PreconditionError("relator reduces to the empty word");
    }
    relators_.push_back(std::move(reduced));
  }
}

Word shift_letters(std::span<const Letter> w, std::uint32_t offset) {
  Word out(w.begin(), w.end());
  for (auto& l : out) l.index += offset;
  return out;
}

Presentation combine(const Presentation& left, const Presentation& right,
                     std::vector<Word> extra) {
  std::vector<std::string> names(left.alphabet().names().begin(),
                                 left.alphabet().names().end());
  for (const auto& n : right.alphabet().names()) {
    if (left.alphabet().index_of(n)) {
      throw PreconditionError("alphabets are not disjoint: '" + n + "'");
    }
    names.push_back(n);
  }
  auto offset = static_cast<std::uint32_t>(left.alphabet().size());
  std::vector<Word> rels(left.relators().begin(), left.relators().end());
  for (const auto& r : right.relators()) rels.push_back(shift_letters(r, offset));
  for (auto& r : extra) rels.push_back(std::move(r));
  return Presentation(Alphabet(std::move(names)), std::move(rels));
}

}  // namespace stallings

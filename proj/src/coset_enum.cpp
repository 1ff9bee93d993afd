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

// HLT coset enumeration with Holt-style coincidence processing.

#include <deque>
#include <string>

#include "stallings/error.hpp"
#include "stallings/subgroup.hpp"

namespace stallings {

namespace {

constexpr std::int64_t kNone = -1;

class Enumerator {
 public:
  // Live cosets may overshoot the final index while coincidences are
  // pending, so the working space is wider than max_cosets.
  Enumerator(std::size_t letters, std::size_t max_cosets)
      : cols_(2 * letters),
        max_cosets_(max_cosets),
        max_active_(4 * max_cosets + 64),
        max_defined_(64 * max_cosets + 1024) {
    new_coset();
  }

  static int column(Letter l) { return 2 * static_cast<int>(l.index) + l.inverse; }

  void scan_and_fill(std::int64_t c, const Word& w) {
    if (w.empty()) return;
    std::int64_t f = c, b = c;
    std::int64_t i = 0, j = static_cast<std::int64_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && cell(f, column(w[i])) != kNone) f = cell(f, column(w[i++]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && cell(b, column(w[j]) ^ 1) != kNone) {
        b = cell(b, column(w[j--]) ^ 1);
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, column(w[i]), b);
        return;
      }
      define(f, column(w[i]));
    }
  }

  void define(std::int64_t c, int col) {
    std::int64_t n = new_coset();
    set(c, col, n);
  }

  bool alive(std::int64_t c) const { return parent_[c] == c; }
  std::int64_t defined() const { return static_cast<std::int64_t>(parent_.size()); }
  std::int64_t cell(std::int64_t c, int col) const { return table_[c * cols_ + col]; }
  int columns() const { return static_cast<int>(cols_); }

 private:
  std::int64_t new_coset() {
    if (active_ + 1 > max_active_ || parent_.size() + 1 > max_defined_) {
      throw CosetLimitExceeded("coset enumeration did not close within " +
                               std::to_string(max_cosets_) + " cosets");
    }
    auto n = static_cast<std::int64_t>(parent_.size());
    parent_.push_back(n);
    table_.resize(table_.size() + cols_, kNone);
    ++active_;
    return n;
  }

  void set(std::int64_t c, int col, std::int64_t d) {
    table_[c * cols_ + col] = d;
    table_[d * cols_ + (col ^ 1)] = c;
  }

  std::int64_t rep(std::int64_t c) {
    std::int64_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::int64_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int64_t a, std::int64_t b, std::deque<std::int64_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --active_;
    queue.push_back(b);
  }

  void coincidence(std::int64_t a, std::int64_t b) {
    std::deque<std::int64_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::int64_t e = queue.front();
      queue.pop_front();
      for (int col = 0; col < columns(); ++col) {
        std::int64_t f = cell(e, col);
        if (f == kNone) continue;
        table_[f * cols_ + (col ^ 1)] = kNone;
        std::int64_t e1 = rep(e), f1 = rep(f);
        if (cell(e1, col) != kNone) {
          merge(f1, cell(e1, col), queue);
        } else if (cell(f1, col ^ 1) != kNone) {
          merge(e1, cell(f1, col ^ 1), queue);
        } else {
          set(e1, col, f1);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_cosets_;
  std::size_t max_active_;
  std::size_t max_defined_;
  std::size_t active_ = 0;
  std::vector<std::int64_t> parent_;
  std::vector<std::int64_t> table_;
};

}  // namespace

SubgroupGraph coset_enumerate(std::shared_ptr<const Presentation> p,
                              std::span<const Word> subgens,
                              std::size_t max_cosets) {
  if (max_cosets == 0) throw PreconditionError("max_cosets must be positive");
  const Alphabet& alphabet = p->alphabet();
  std::vector<Word> gens;
  for (const auto& w : subgens) {
    check_word(w, alphabet);
    gens.push_back(free_reduce(w));
  }
  Enumerator en(alphabet.size(), max_cosets);
  for (const auto& w : gens) en.scan_and_fill(0, w);
  for (std::int64_t c = 0; c < en.defined(); ++c) {
    for (const auto& r : p->relators()) {
      if (!en.alive(c)) break;
      en.scan_and_fill(c, r);
    }
    for (int col = 0; col < en.columns() && en.alive(c); ++col) {
      if (en.cell(c, col) == kNone) en.define(c, col);
    }
  }

  // Renumber the live cosets breadth-first from coset 0.
  std::vector<std::int64_t> order{0};
  std::vector<Vertex> id(static_cast<std::size_t>(en.defined()),
                         std::numeric_limits<Vertex>::max());
  id[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int col = 0; col < en.columns(); ++col) {
      std::int64_t d = en.cell(order[i], col);
      if (id[d] == std::numeric_limits<Vertex>::max()) {
        id[d] = static_cast<Vertex>(order.size());
        order.push_back(d);
      }
    }
  }
  if (order.size() > max_cosets) {
    throw CosetLimitExceeded("index " + std::to_string(order.size()) +
                             " exceeds " + std::to_string(max_cosets) + " cosets");
  }
  std::vector<Edge> edges;
  for (std::int64_t c : order) {
    for (std::uint32_t x = 0; x < alphabet.size(); ++x) {
      edges.push_back({id[c], x, id[en.cell(c, 2 * static_cast<int>(x))]});
    }
  }
  XGraph g(p->alphabet_ptr(), order.size(), std::move(edges));
  return SubgroupGraph(BasedXGraph(std::move(g), 0), std::move(p));
}

SubgroupGraph coset_enumerate(const Presentation& p,
                              std::span<const Word> subgens,
                              std::size_t max_cosets) {
  return coset_enumerate(std::make_shared<const Presentation>(p), subgens,
                         max_cosets);
}

}  // namespace stallings

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

// Low-index search over standard coset tables (Sims). The first undefined
// entry is filled with every existing coset or one new coset; relator
// deductions are propagated after each assignment and undone on backtrack.

#include "stallings/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <set>
#include <thread>

#include "stallings/error.hpp"

namespace stallings {

namespace {

using Table = std::vector<int>;

struct State {
  Table table;
  int used = 1;
};

class LowIndex {
 public:
  LowIndex(const Presentation& p, int n, std::uint64_t budget,
           std::atomic<std::uint64_t>& nodes)
      : n_(n),
        cols_(2 * static_cast<int>(p.alphabet().size())),
        budget_(budget),
        nodes_(nodes),
        by_first_(static_cast<std::size_t>(cols_)) {
    std::set<std::vector<int>> seen;
    for (const auto& r : p.relators()) {
      for (const Word& w : {r, inverse(r)}) {
        for (std::size_t s = 0; s < w.size(); ++s) {
          std::vector<int> rot;
          for (std::size_t i = 0; i < w.size(); ++i) {
            Letter l = w[(s + i) % w.size()];
            rot.push_back(2 * static_cast<int>(l.index) + l.inverse);
          }
          if (seen.insert(rot).second) by_first_[rot.front()].push_back(rot);
        }
      }
    }
  }

  State root() const {
    return {Table(static_cast<std::size_t>(n_ * cols_), -1), 1};
  }

  // Children in search order; a child with no undefined entry is a leaf.
  std::vector<State> expand(const State& s) {
    std::vector<State> out;
    State work = s;
    auto [c, col] = first_undefined(work);
    if (c < 0) return out;
    for (int t = 0; t <= std::min(work.used, n_ - 1); ++t) {
      std::size_t mark = trail_.size();
      int used = work.used;
      if (try_assign(work, c, col, t)) out.push_back(work);
      undo(work, mark);
      work.used = used;
    }
    return out;
  }

  // Appends every complete table below s (including s itself).
  void dfs(State& s, std::vector<Table>& out) {
    auto [c, col] = first_undefined(s);
    if (c < 0) {
      if (s.used == n_) out.push_back(s.table);
      return;
    }
    for (int t = 0; t <= std::min(s.used, n_ - 1); ++t) {
      std::size_t mark = trail_.size();
      int used = s.used;
      if (try_assign(s, c, col, t)) dfs(s, out);
      undo(s, mark);
      s.used = used;
    }
  }

  bool complete(const State& s) const { return first_undefined(s).first < 0; }
  int columns() const { return cols_; }

 private:
  std::pair<int, int> first_undefined(const State& s) const {
    for (int c = 0; c < s.used; ++c) {
      for (int col = 0; col < cols_; ++col) {
        if (s.table[c * cols_ + col] < 0) return {c, col};
      }
    }
    return {-1, -1};
  }

  bool try_assign(State& s, int c, int col, int t) {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      throw SearchBudgetExceeded("low-index search exceeded " +
                                 std::to_string(budget_) + " nodes");
    }
    if (t == s.used) ++s.used;
    if (s.table[t * cols_ + (col ^ 1)] >= 0) return false;
    queue_.clear();
    assign(s, c, col, t);
    while (!queue_.empty()) {
      auto [d, dc] = queue_.back();
      queue_.pop_back();
      for (const auto& w : by_first_[dc]) {
        if (!scan(s, d, w)) return false;
      }
    }
    return true;
  }

  void assign(State& s, int c, int col, int t) {
    s.table[c * cols_ + col] = t;
    trail_.push_back(c * cols_ + col);
    queue_.emplace_back(c, col);
    if (s.table[t * cols_ + (col ^ 1)] < 0) {
      s.table[t * cols_ + (col ^ 1)] = c;
      trail_.push_back(t * cols_ + (col ^ 1));
      queue_.emplace_back(t, col ^ 1);
    }
  }

  // Traces w at c from both ends; false on a contradiction, deduces the
  // single missing entry when exactly one is left.
  bool scan(State& s, int c, const std::vector<int>& w) {
    const Table& t = s.table;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (i <= j && t[f * cols_ + w[i]] >= 0) f = t[f * cols_ + w[i++]];
    if (i > j) return f == c;
    while (j >= i && t[b * cols_ + (w[j] ^ 1)] >= 0) b = t[b * cols_ + (w[j--] ^ 1)];
    if (j < i) return f == b;
    if (i == j) assign(s, f, w[i], b);
    return true;
  }

  void undo(State& s, std::size_t mark) {
    while (trail_.size() > mark) {
      s.table[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  int n_;
  int cols_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<std::vector<std::vector<int>>> by_first_;
  std::vector<int> trail_;
  std::vector<std::pair<int, int>> queue_;
};

// Breadth-first renumbering of a complete table from a new base.
Table rebased(const Table& t, int n, int cols, int base) {
  std::vector<int> id(static_cast<std::size_t>(n), -1), order{base};
  id[base] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int col = 0; col < cols; ++col) {
      int d = t[order[i] * cols + col];
      if (id[d] < 0) {
        id[d] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  }
  Table out(t.size());
  for (int c = 0; c < n; ++c) {
    for (int col = 0; col < cols; ++col) {
      out[id[c] * cols + col] = id[t[c * cols + col]];
    }
  }
  return out;
}

bool least_over_rebasings(const Table& t, int n, int cols) {
  for (int v = 1; v < n; ++v) {
    if (rebased(t, n, cols, v) < t) return false;
  }
  return true;
}

}  // namespace

std::vector<SubgroupGraph> enumerate_graphs(const EnumerationTask& task,
                                            const SearchOptions& options) {
  if (task.vertex_count == 0) throw PreconditionError("vertex_count must be >= 1");
  const int n = static_cast<int>(task.vertex_count);
  std::atomic<std::uint64_t> nodes{0};
  LowIndex search(task.presentation, n, options.budget, nodes);
  const int cols = search.columns();

  std::vector<Table> tables;
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    State root = search.root();
    search.dfs(root, tables);
  } else {
    // Split the tree into an ordered frontier and hand its nodes out
    // round-robin; results are concatenated in frontier order.
    std::vector<State> frontier{search.root()};
    while (frontier.size() < 4 * jobs) {
      std::vector<State> next;
      bool grew = false;
      for (auto& s : frontier) {
        if (search.complete(s)) {
          next.push_back(std::move(s));
          continue;
        }
        auto kids = search.expand(s);
        grew = true;
        for (auto& k : kids) next.push_back(std::move(k));
      }
      frontier = std::move(next);
      if (!grew) break;
    }
    std::vector<std::vector<Table>> found(frontier.size());
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          LowIndex local(task.presentation, n, options.budget, nodes);
          for (std::size_t i = w; i < frontier.size(); i += jobs) {
            local.dfs(frontier[i], found[i]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& f : found) {
      for (auto& t : f) tables.push_back(std::move(t));
    }
  }

  auto presentation = std::make_shared<const Presentation>(task.presentation);
  std::vector<SubgroupGraph> out;
  for (const auto& t : tables) {
    if (task.mode == EnumerationMode::unbased && !least_over_rebasings(t, n, cols)) {
      continue;
    }
    std::vector<Edge> edges;
    for (int c = 0; c < n; ++c) {
      for (int x = 0; 2 * x < cols; ++x) {
        edges.push_back({static_cast<Vertex>(c), static_cast<std::uint32_t>(x),
                         static_cast<Vertex>(t[c * cols + 2 * x])});
      }
    }
    XGraph g(presentation->alphabet_ptr(), static_cast<std::size_t>(n),
             std::move(edges));
    out.emplace_back(BasedXGraph(std::move(g), 0), presentation);
  }
  return out;
}

std::optional<SubgroupGraph> hall_search(const Presentation& p,
                                         std::size_t group_order, std::size_t d,
                                         const SearchOptions& options) {
  if (d == 0 || group_order == 0 || group_order % d != 0) {
    throw PreconditionError(std::to_string(d) + " does not divide " +
                            std::to_string(group_order));
  }
  if (std::gcd(d, group_order / d) != 1) {
    throw PreconditionError(std::to_string(d) + " and " +
                            std::to_string(group_order / d) +
                            " are not coprime");
  }
  auto found = enumerate_graphs({p, group_order / d, EnumerationMode::unbased},
                                options);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

}  // namespace stallings

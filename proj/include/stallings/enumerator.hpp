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
#include <optional>
#include <vector>

#include "stallings/subgroup.hpp"

namespace stallings {

enum class EnumerationMode { based, unbased };

struct EnumerationTask {
  Presentation presentation;
  std::size_t vertex_count = 1;
  EnumerationMode mode = EnumerationMode::based;
};

struct SearchOptions {
  std::uint64_t budget = 10'000'000;  // backtrack nodes
  unsigned jobs = 1;
};

// Every connected X-regular graph on exactly vertex_count vertices that
// fulfills the relators, one per class (based or unbased), each given by its
// lexicographically least coset table with the base as vertex 0. Results come
// in increasing table order. Throws SearchBudgetExceeded.
std::vector<SubgroupGraph> enumerate_graphs(const EnumerationTask& task,
                                            const SearchOptions& options = {});

// A subgroup of order d (index group_order / d), or nothing. Requires d to
// divide the order with d and order / d coprime.
std::optional<SubgroupGraph> hall_search(const Presentation& p,
                                         std::size_t group_order, std::size_t d,
                                         const SearchOptions& options = {});

}  // namespace stallings

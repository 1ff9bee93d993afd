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

#include <memory>
#include <string>
#include <string_view>

#include "stallings/words.hpp"
#include "stallings/xgraph.hpp"

namespace stallings {

// Words: spaced tokens `a b^-1 (a b)^3`, or compact `aBa` (uppercase =
// inverse) when every generator is a single lowercase letter; `1` is the
// empty word. Errors are reported against `line`.
Word parse_word(std::string_view text, const Alphabet& alphabet,
                std::size_t line = 1);

// `gens: <names>` then `rel: <word>[, <word> ...]` lines; `#` comments.
Presentation parse_presentation(std::string_view text);
std::string serialize_presentation(const Presentation& p);

// `vertices: N`, `base: k`, `edge: u <name> v` lines; `#` comments.
BasedXGraph parse_graph(std::string_view text,
                        std::shared_ptr<const Alphabet> alphabet);
// Canonical form: breadth-first numbering from the base, sorted edges.
std::string serialize_graph(const BasedXGraph& g);

std::string export_dot(const BasedXGraph& g);

std::string read_file(const std::string& path);

}  // namespace stallings

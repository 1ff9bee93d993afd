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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "stallings/error.hpp"
#include "stallings/io.hpp"

using namespace stallings;

namespace {

std::size_t parse_error_line(auto&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("word syntax") {
  Alphabet ab({"a", "b"});
  CHECK(parse_word("a b^-1 a", ab) == Word{gen(0), inv(1), gen(0)});
  CHECK(parse_word("aBa", ab) == Word{gen(0), inv(1), gen(0)});
  CHECK(parse_word("(ab)^2", ab) == Word{gen(0), gen(1), gen(0), gen(1)});
  CHECK(parse_word("(a b)^-1", ab) == Word{inv(1), inv(0)});
  CHECK(parse_word("a^0 b", ab) == Word{gen(1)});
  CHECK(parse_word("1", ab).empty());
  CHECK(parse_word("a*b", ab) == Word{gen(0), gen(1)});
  CHECK(parse_word("((a)^2 b)^2", ab).size() == 6);
  // Parsing does not reduce.
  CHECK(parse_word("a A", ab) == Word{gen(0), inv(0)});

  Alphabet s({"s1", "s2"});
  CHECK(parse_word("s1 s2^-1", s) == Word{gen(0), inv(1)});
  CHECK(parse_word("(s1 s2)^3", s).size() == 6);
  CHECK_THROWS_AS(parse_word("s3", s), ParseError);
  CHECK_THROWS_AS(parse_word("s1s2", s), ParseError);
  CHECK_THROWS_AS(parse_word("(s1", s), ParseError);
  CHECK_THROWS_AS(parse_word("s1^", s), ParseError);
  CHECK_THROWS_AS(parse_word("s1)", s), ParseError);
  CHECK_THROWS_AS(parse_word("c", ab), ParseError);
  CHECK(parse_error_line([&] { parse_word("x", ab, 7); }) == 7);
}

TEST_CASE("presentation files") {
  auto z2 = parse_presentation("gens: a\nrel: a a\n");
  CHECK(z2 == Presentation(Alphabet({"a"}), {Word{gen(0), gen(0)}}));

  auto s3 = parse_presentation("# comment\n\ngens: s1, s2\nrel: s1^2, s2^2\nrel: (s1 s2)^3 # tail\n");
  CHECK(s3 == fixtures::s3());
  CHECK(parse_presentation("gens: a b\n").relators().empty());
  CHECK(parse_presentation("gens: a b\nrel: aB\n").relators()[0] == Word{gen(0), inv(1)});

  CHECK(parse_error_line([] { parse_presentation("rel: a\n"); }) == 1);
  CHECK(parse_error_line([] { parse_presentation("gens: a\n\nrel: b\n"); }) == 3);
  CHECK(parse_error_line([] { parse_presentation("gens: a\nrel: a\nfoo: a\n"); }) == 3);
  CHECK(parse_error_line([] { parse_presentation("gens: a a\n"); }) == 1);
  CHECK(parse_error_line([] { parse_presentation("gens: a\nrel: a A\n"); }) == 2);
  CHECK(parse_error_line([] { parse_presentation("gens: a\ngens: b\n"); }) == 2);
  CHECK_THROWS_AS(parse_presentation(""), ParseError);

  for (const auto& g : fixtures::finite_corpus()) {
    auto text = serialize_presentation(g.presentation);
    CHECK(parse_presentation(text) == g.presentation);
    CHECK(serialize_presentation(parse_presentation(text)) == text);
  }
}

TEST_CASE("data files parse") {
  for (const char* name : {"s3", "d3", "delta333", "z2", "quaternion", "free2", "bs23", "z2_z3",
                           "b3", "s4"}) {
    INFO(name);
    auto p = parse_presentation(read_file(std::string(STALLINGS_DATA_DIR) + "/" + name + ".pres"));
    CHECK(p.alphabet().size() >= 1);
  }
  CHECK(parse_presentation(read_file(std::string(STALLINGS_DATA_DIR) + "/s3.pres")) ==
        fixtures::s3());
  CHECK(parse_presentation(read_file(std::string(STALLINGS_DATA_DIR) + "/delta333.pres")) ==
        fixtures::delta333());
  CHECK_THROWS_AS(read_file("/nonexistent/file"), Error);
}

TEST_CASE("graph files") {
  auto s = std::make_shared<const Alphabet>(Alphabet({"s1", "s2"}));
  auto g = parse_graph(
      "vertices: 3\nbase: 0\nedge: 0 s1 0\nedge: 0 s2 1\nedge: 1 s1 2\nedge: 1 s2 0\n"
      "edge: 2 s1 1\nedge: 2 s2 2\n",
      s);
  CHECK(g.graph() == fixtures::s3_index3());
  CHECK(g.base() == 0);

  CHECK(parse_error_line([&] { parse_graph("vertices: 2\nbase: 0\nedge: 0 s3 1\n", s); }) == 3);
  CHECK(parse_error_line([&] { parse_graph("vertices: 2\nbase: 0\nedge: 0 s1 2\n", s); }) == 3);
  CHECK(parse_error_line([&] { parse_graph("vertices: 2\nbase: 5\n", s); }) == 2);
  CHECK(parse_error_line([&] { parse_graph("base: 0\n", s); }) == 1);
  CHECK(parse_error_line([&] { parse_graph("vertices: x\n", s); }) == 1);
  CHECK_THROWS_AS(parse_graph("vertices: 2\nedge: 0 s1 1\n", s), ParseError);
}

TEST_CASE("graph round trips on the fixture corpus") {
  std::vector<BasedXGraph> corpus{
      fixtures::basis_graph(),
      fixtures::hanging_graph(),
      BasedXGraph(fixtures::s3_index3(), 0),
      BasedXGraph(fixtures::s3_index3(), 2),
      BasedXGraph(fixtures::s3_index2(), 1),
      BasedXGraph(fixtures::d3_index2(), 0),
      BasedXGraph(fixtures::fulfil_gamma(), 1),
      BasedXGraph(fixtures::fulfil_gamma_prime(), 3),
  };
  for (const auto& g : corpus) {
    auto text = serialize_graph(g);
    auto back = parse_graph(text, g.graph().alphabet_ptr());
    CHECK(serialize_graph(back) == text);
    CHECK(back.base() == 0);
    CHECK(isomorphic_based(back, g));
    CHECK(back.graph() == canonical(g).graph());
    CHECK(serialize_graph(g) == text);
  }
  // Renumbered inputs serialize identically.
  CHECK(serialize_graph(BasedXGraph(fixtures::s3_index2(), 1)) ==
        serialize_graph(BasedXGraph(fixtures::s3_index2(), 0)));
  CHECK(serialize_graph(BasedXGraph(fixtures::s3_index3(), 2)) !=
        serialize_graph(BasedXGraph(fixtures::s3_index3(), 0)));
}

TEST_CASE("DOT export") {
  Alphabet ab({"a", "b"});
  auto dot = export_dot(BasedXGraph(bouquet(std::make_shared<const Alphabet>(ab)), 0));
  CHECK(dot.rfind("digraph G {", 0) == 0);
  CHECK(occurrences(dot, "[shape=doublecircle]") == 1);
  CHECK(occurrences(dot, "[shape=circle]") == 0);
  CHECK(occurrences(dot, "0 -> 0") == 2);
  CHECK(occurrences(dot, "label=\"a\"") == 1);
  CHECK(occurrences(dot, "label=\"b\"") == 1);

  auto d = export_dot(fixtures::basis_graph());
  CHECK(occurrences(d, " -> ") == 10);
  CHECK(occurrences(d, "[shape=circle]") == 5);
  CHECK(export_dot(fixtures::basis_graph()) == d);
}

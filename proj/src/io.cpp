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

#include "stallings/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "stallings/error.hpp"

namespace stallings {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet, std::size_t line)
      : text_(text), alphabet_(alphabet), line_(line),
        compact_(alphabet.is_compact()) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  Word sequence() {
    Word out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      Word item = atom();
      item = power(item, exponent());
      out.insert(out.end(), item.begin(), item.end());
    }
  }

  Word atom() {
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = sequence();
      if (pos_ == text_.size()) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '1' && (pos_ + 1 == text_.size() || !is_name_char(text_[pos_ + 1]))) {
      ++pos_;
      return {};
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (compact_) {
      // One letter per character; an exponent binds to the last letter only,
      // so hand the letters back one at a time.
      ++pos_;
      auto lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      auto idx = alphabet_.index_of(std::string_view(&lower, 1));
      if (!idx) fail("unknown generator '" + std::string(1, c) + "'");
      return {Letter{*idx, c != lower}};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    auto idx = alphabet_.index_of(name);
    if (!idx) fail("unknown generator '" + std::string(name) + "'");
    return {gen(*idx)};
  }

  long long exponent() {
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    long long k = 0;
    const char* first = text_.data() + start;
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, k);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("bad exponent");
    return k;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t line_;
  bool compact_;
  std::size_t pos_ = 0;
};

// Calls f(line_number, key, value) for each non-blank, non-comment line.
template <class F>
void for_each_entry(std::string_view text, F&& f) {
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(number, "expected 'key: value'");
    f(number, trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
  }
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    std::size_t at = s.find(sep);
    out.push_back(trim(s.substr(0, at)));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

std::uint64_t parse_number(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet, std::size_t line) {
  return WordParser(text, alphabet, line).parse();
}

Presentation parse_presentation(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<Word> relators;
  for_each_entry(text, [&](std::size_t line, std::string_view key, std::string_view value) {
    if (key == "gens") {
      if (alphabet) throw ParseError(line, "duplicate gens line");
      std::vector<std::string> names;
      std::istringstream in{std::string(value)};
      for (std::string n; in >> n;) {
        for (auto part : split(n, ',')) {
          if (!part.empty()) names.emplace_back(part);
        }
      }
      try {
        alphabet.emplace(std::move(names));
      } catch (const PreconditionError& e) {
        throw ParseError(line, e.what());
      }
    } else if (key == "rel") {
      if (!alphabet) throw ParseError(line, "rel before gens");
      for (auto part : split(value, ',')) {
        Word w = free_reduce(parse_word(part, *alphabet, line));
        if (w.empty()) throw ParseError(line, "relator reduces to the empty word");
        relators.push_back(std::move(w));
      }
    } else {
      throw ParseError(line, "unknown key '" + std::string(key) + "'");
    }
  });
  if (!alphabet) throw ParseError(1, "missing gens line");
  return Presentation(std::move(*alphabet), std::move(relators));
}

std::string serialize_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& n : p.alphabet().names()) out += " " + n;
  out += "\n";
  for (const auto& r : p.relators()) out += "rel: " + format_word(r, p.alphabet()) + "\n";
  return out;
}

BasedXGraph parse_graph(std::string_view text,
                        std::shared_ptr<const Alphabet> alphabet) {
  std::optional<std::uint64_t> vertices, base;
  std::size_t vertices_line = 1, base_line = 1;
  std::vector<std::pair<std::size_t, Edge>> edges;
  for_each_entry(text, [&](std::size_t line, std::string_view key, std::string_view value) {
    if (key == "vertices") {
      if (vertices) throw ParseError(line, "duplicate vertices line");
      vertices = parse_number(value, line);
      vertices_line = line;
    } else if (key == "base") {
      if (base) throw ParseError(line, "duplicate base line");
      base = parse_number(value, line);
      base_line = line;
    } else if (key == "edge") {
      std::istringstream in{std::string(value)};
      std::string u, name, v, extra;
      if (!(in >> u >> name >> v) || (in >> extra)) {
        throw ParseError(line, "expected 'edge: <u> <letter> <v>'");
      }
      auto idx = alphabet->index_of(name);
      if (!idx) throw ParseError(line, "unknown generator '" + name + "'");
      edges.push_back({line, {static_cast<Vertex>(parse_number(u, line)), *idx,
                              static_cast<Vertex>(parse_number(v, line))}});
    } else {
      throw ParseError(line, "unknown key '" + std::string(key) + "'");
    }
  });
  if (!vertices) throw ParseError(1, "missing vertices line");
  if (!base) throw ParseError(1, "missing base line");
  if (*vertices == 0) {
    throw ParseError(vertices_line, "a based graph needs at least one vertex");
  }
  if (*base >= *vertices) throw ParseError(base_line, "base vertex out of range");
  std::vector<Edge> plain;
  for (const auto& [line, e] : edges) {
    if (e.origin >= *vertices || e.terminus >= *vertices) {
      throw ParseError(line, "edge endpoint out of range");
    }
    plain.push_back(e);
  }
  return BasedXGraph(XGraph(std::move(alphabet), *vertices, std::move(plain)),
                     static_cast<Vertex>(*base));
}

std::string serialize_graph(const BasedXGraph& g) {
  BasedXGraph c = canonical(g);
  const Alphabet& alphabet = c.graph().alphabet();
  std::string out = "vertices: " + std::to_string(c.graph().vertex_count()) +
                    "\nbase: " + std::to_string(c.base()) + "\n";
  for (const auto& e : c.graph().edges()) {
    out += "edge: " + std::to_string(e.origin) + " " + alphabet.name(e.letter) +
           " " + std::to_string(e.terminus) + "\n";
  }
  return out;
}

std::string export_dot(const BasedXGraph& g) {
  const Alphabet& alphabet = g.graph().alphabet();
  std::string out = "digraph G {\n";
  for (Vertex v = 0; v < g.graph().vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [shape=" +
           (v == g.base() ? "doublecircle" : "circle") + "];\n";
  }
  for (const auto& e : g.graph().edges()) {
    out += "  " + std::to_string(e.origin) + " -> " + std::to_string(e.terminus) +
           " [label=\"" + alphabet.name(e.letter) + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace stallings

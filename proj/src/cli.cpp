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

#include "stallings/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "stallings/enumerator.hpp"
#include "stallings/error.hpp"
#include "stallings/gammafam.hpp"
#include "stallings/io.hpp"
#include "stallings/products.hpp"
#include "stallings/subgroup.hpp"

namespace stallings {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::size_t default_max_cosets() {
  if (const char* env = std::getenv("STALLINGS_MAX_COSETS")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw PreconditionError("STALLINGS_MAX_COSETS must be a positive integer");
  }
  return kDefaultMaxCosets;
}

// Options shared by every subcommand.
struct Common {
  std::string presentation;
  std::optional<std::size_t> max_cosets;
  std::string dot;
};

// A single subgroup given by generators or a graph file.
struct SubgroupOptions {
  std::vector<std::string> gens;
  std::string graph;
};

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Subgroup graphs of finitely presented groups", "stallings"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");
    declare(app);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out_, err_);
      return code == 0 ? kYes : kUsage;
    }
    try {
      return action_();
    } catch (const ParseError& e) {
      err_ << "parse error: " << e.what() << "\n";
      return kUsage;
    } catch (const CosetLimitExceeded& e) {
      err_ << "budget exceeded: " << e.what() << "\n";
      return kBudget;
    } catch (const SearchBudgetExceeded& e) {
      err_ << "budget exceeded: " << e.what() << "\n";
      return kBudget;
    } catch (const FulfillmentFailed& e) {
      err_ << "fulfillment failed: " << e.what() << "\n";
      return kNo;
    } catch (const SpecInvalid& e) {
      err_ << "invalid spec: " << e.what() << "\n";
      return kNo;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }
  }

 private:
  CLI::App* command(CLI::App& app, const std::string& name,
                    const std::string& help, std::function<int()> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-p,--presentation", common_.presentation,
                    "Presentation file")->required();
    sub->add_option("--max-cosets", common_.max_cosets,
                    "Coset enumeration bound")->check(CLI::PositiveNumber);
    sub->add_option("--dot", common_.dot, "Write the resulting graph as DOT");
    sub->final_callback([this, body] { action_ = body; });
    return sub;
  }

  void subgroup_options(CLI::App* sub) {
    sub->add_option("-g,--gen", sub_.gens, "Subgroup generator (repeatable)");
    sub->add_option("--graph", sub_.graph, "Subgroup graph file");
  }

  void declare(CLI::App& app) {
    auto* build = command(app, "build", "Coset-enumerate a subgroup graph", [this] {
      auto sg = subgroup();
      out_ << serialize_graph(sg.based());
      dot(sg.based());
      return kYes;
    });
    subgroup_options(build);

    auto* verify = command(app, "verify", "Check a graph file is a subgroup graph", [this] {
      auto g = parse_graph(read_file(file_), presentation()->alphabet_ptr());
      try {
        SubgroupGraph sg(g, presentation());
        out_ << "subgroup graph of index " << sg.index() << "\n";
        dot(sg.based());
        return kYes;
      } catch (const PreconditionError& e) {
        out_ << "not a subgroup graph: " << e.what() << "\n";
        return kNo;
      }
    });
    verify->add_option("graph", file_, "Graph file")->required();

    subgroup_options(command(app, "index", "Index of the subgroup", [this] {
      out_ << subgroup().index() << "\n";
      return kYes;
    }));

    subgroup_options(command(app, "cosets", "Coset representatives", [this] {
      auto sg = subgroup();
      for (Vertex v = 0; v < sg.index(); ++v) {
        out_ << v << ": " << format_word(sg.coset_reps()[v], alphabet()) << "\n";
      }
      return kYes;
    }));

    auto* member = command(app, "membership", "Is a word in the subgroup", [this] {
      auto sg = subgroup();
      bool in = contains(sg, parse_word(word_, alphabet()));
      out_ << (in ? "member" : "not a member") << "\n";
      return in ? kYes : kNo;
    });
    subgroup_options(member);
    member->add_option("word", word_, "Word to test")->required();

    subgroup_options(command(app, "basis", "Free basis of the loop language", [this] {
      for (const auto& w : free_basis(subgroup())) out_ << format_word(w, alphabet()) << "\n";
      return kYes;
    }));

    auto* conj = command(app, "conjugate", "Find a conjugator g with H1 = g H2 g^-1", [this] {
      auto a = resolve(pair_[0]);
      auto b = resolve(pair_[1]);
      if (auto g = conjugate(a, b)) {
        out_ << "conjugate by " << format_word(*g, alphabet()) << "\n";
        return kYes;
      }
      out_ << "not conjugate\n";
      return kNo;
    });
    conj->add_option("sub", pair_, "Two subgroups (graph file or comma-separated generators)")
        ->expected(2)->required();

    subgroup_options(command(app, "normal", "Is the subgroup normal", [this] {
      bool n = is_normal(subgroup());
      out_ << (n ? "normal" : "not normal") << "\n";
      return n ? kYes : kNo;
    }));

    subgroup_options(command(app, "normalizer", "Normalizer and its coset reps", [this] {
      auto sg = subgroup();
      auto n = normalizer(sg);
      out_ << "index of H in N: " << n.vertices.size() << "\n";
      out_ << "index of N: " << n.graph.index() << "\n";
      for (std::size_t i = 0; i < n.reps.size(); ++i) {
        out_ << "rep " << n.vertices[i] << ": " << format_word(n.reps[i], alphabet()) << "\n";
      }
      out_ << serialize_graph(n.graph.based());
      dot(n.graph.based());
      return kYes;
    }));

    auto* inter = command(app, "intersect", "Subgroup graph of H1 ∩ H2", [this] {
      auto sg = intersect(resolve(pair_[0]), resolve(pair_[1]));
      out_ << serialize_graph(sg.based());
      dot(sg.based());
      return kYes;
    });
    inter->add_option("sub", pair_, "Two subgroups")->expected(2)->required();

    auto* meet = command(app, "coset-meet", "Intersect cosets H1 g_v and H2 g_v'", [this] {
      ProductGraph pg(resolve(pair_[0]), resolve(pair_[1]));
      Vertex v1 = vertex_arg(pair_[2]), v2 = vertex_arg(pair_[3]);
      if (auto g = coset_meet(pg, v1, v2)) {
        out_ << "(H1 ∩ H2) " << format_word(*g, alphabet()) << "\n";
        return kYes;
      }
      out_ << "empty\n";
      return kNo;
    });
    meet->add_option("args", pair_, "Two subgroups, then a vertex of each graph")
        ->expected(4)->required();

    auto* mal = command(app, "malnormal", "Malnormality in a finite group", [this] {
      bool m = is_malnormal(subgroup(), order_);
      out_ << (m ? "malnormal" : "not malnormal") << "\n";
      return m ? kYes : kNo;
    });
    subgroup_options(mal);
    mal->add_option("--order", order_, "Group order")->required()->check(CLI::PositiveNumber);

    auto* hall = command(app, "hall", "Search a Hall subgroup of order d", [this] {
      auto found = hall_search(*presentation(), order_, d_, search_);
      if (!found) {
        out_ << "none\n";
        return kNo;
      }
      out_ << serialize_graph(found->based());
      dot(found->based());
      return kYes;
    });
    hall->add_option("--order", order_, "Group order")->required()->check(CLI::PositiveNumber);
    hall->add_option("--d", d_, "Subgroup order")->required()->check(CLI::PositiveNumber);
    search_options(hall);

    auto* en = command(app, "enumerate", "All subgroup graphs with n vertices", [this] {
      EnumerationMode m = mode_ == "unbased" ? EnumerationMode::unbased
                                             : EnumerationMode::based;
      auto found = enumerate_graphs({*presentation(), n_, m}, search_);
      out_ << "# " << found.size() << " " << mode_ << " classes\n";
      for (std::size_t i = 0; i < found.size(); ++i) {
        out_ << "# class " << i + 1 << "\n" << serialize_graph(found[i].based());
      }
      return found.empty() ? kNo : kYes;
    });
    en->add_option("--n", n_, "Vertex count")->required()->check(CLI::PositiveNumber);
    en->add_option("--mode", mode_, "based or unbased")
        ->check(CLI::IsMember({"based", "unbased"}));
    search_options(en);

    declare_gamma(app);

    auto* cert = command(app, "certify", "Check a graph as a Γ_p certificate", [this] {
      auto sg = subgroup();
      Word w = parse_word(word_, alphabet());
      auto reach = verify_reachability(sg.based(), w);
      bool count_ok = sg.index() == prime_;
      bool prime_ok = is_prime(prime_);
      out_ << "vertices: " << sg.index() << (count_ok ? " (ok)" : " (expected " + std::to_string(prime_) + ")") << "\n";
      out_ << "prime: " << (prime_ok ? "yes" : "no") << "\n";
      out_ << "fulfills: ok\n";
      out_ << "reachability: " << (reach.ok ? "ok" : "failed") << "\n";
      return count_ok && prime_ok && reach.ok ? kYes : kNo;
    });
    subgroup_options(cert);
    cert->add_option("--prime", prime_, "Expected prime vertex count")->required();
    cert->add_option("--word", word_, "The word w")->required();
  }

  void declare_gamma(CLI::App& app) {
    auto* gamma = app.add_subcommand("gamma", "Build Γ_p certificates");
    gamma->require_subcommand(1);

    auto* t1 = command(*gamma, "type1", "(a,p)-circle with loops", [this] {
      return report(build_type1(*presentation(), letter(a_), p_));
    });
    t1->add_option("--letter", a_, "Circle letter")->required();
    t1->add_option("--vertices", p_, "Vertex count")->required()->check(CLI::PositiveNumber);

    auto* artin = command(*gamma, "artin", "Parallel circles for Artin relators", [this] {
      return report(build_artin(*presentation(), p_));
    });
    artin->add_option("--vertices", p_, "Vertex count")->required()->check(CLI::PositiveNumber);

    auto* t2 = command(*gamma, "type2", "(a,k,b,l) chain", [this] {
      auto c = pairs(k_ + l_ - 2);
      return report(build_type2(*presentation(), letter(a_), k_, letter(b_), l_, c));
    });
    t2->add_option("--a", a_, "First letter")->required();
    t2->add_option("--k", k_, "First circle length")->required();
    t2->add_option("--b", b_, "Second letter")->required();
    t2->add_option("--l", l_, "Second circle length")->required();
    chain_options(t2);

    auto* glued = command(*gamma, "glued", "Free product chain of two factors", [this] {
      auto spec = gluing();
      spec.pair_count = pairs(spec.left.graph.index() + spec.right.graph.index() - 2);
      return report(build_glued(spec));
    });
    gluing_options(glued);

    auto* amalgam = command(*gamma, "amalgam", "Amalgamated chain", [this] {
      auto spec = gluing();
      spec.pair_count = pairs(spec.left.graph.index() + spec.right.graph.index() - 2);
      std::vector<std::pair<Word, Word>> ids;
      const auto& right = spec.right.graph.presentation().alphabet();
      for (const auto& s : identify_) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError(1, "expected d=psi(d), got '" + s + "'");
        ids.emplace_back(parse_word(s.substr(0, eq), alphabet()),
                         parse_word(s.substr(eq + 1), right));
      }
      return report(build_amalgam(spec, ids));
    });
    gluing_options(amalgam);
    amalgam->add_option("--identify", identify_, "Identification d=psi(d) (repeatable)");
  }

  void search_options(CLI::App* sub) {
    sub->add_option("--jobs", search_.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", search_.budget, "Backtrack node budget")
        ->check(CLI::PositiveNumber);
  }

  void chain_options(CLI::App* sub) {
    auto* c = sub->add_option("--pairs", pairs_, "Number of copies of each factor")
                  ->check(CLI::PositiveNumber);
    auto* p = sub->add_option("--vertices", p_, "Target vertex count")->check(CLI::PositiveNumber);
    c->excludes(p);
    p->excludes(c);
  }

  void gluing_options(CLI::App* sub) {
    sub->add_option("--h1", h1_, "Left subgroup (graph file or generators)")->required();
    sub->add_option("--w1", w1_, "Left word")->required();
    sub->add_option("--right", right_path_, "Right presentation file")->required();
    sub->add_option("--h2", h2_, "Right subgroup (graph file or generators)")->required();
    sub->add_option("--w2", w2_, "Right word")->required();
    chain_options(sub);
  }

  std::uint64_t pairs(std::uint64_t step) const {
    if (pairs_) return *pairs_;
    if (p_ == 0) throw PreconditionError("give --pairs or --vertices");
    if (step == 0 || (p_ - 1) % step != 0 || p_ == 1) {
      throw PreconditionError(std::to_string(p_) + " is not of the form " +
                              std::to_string(step) + " c + 1");
    }
    return (p_ - 1) / step;
  }

  GluingSpec gluing() {
    auto right = std::make_shared<const Presentation>(parse_presentation(read_file(right_path_)));
    auto left_sg = resolve(h1_, presentation());
    auto right_sg = resolve(h2_, right);
    Word w1 = parse_word(w1_, alphabet());
    Word w2 = parse_word(w2_, right->alphabet());
    return {{std::move(left_sg), w1}, {std::move(right_sg), w2}, 1};
  }

  int report(const GammaPCertificate& c) {
    const Alphabet& a = c.graph.presentation().alphabet();
    out_ << "vertices: " << c.prime << "\n";
    out_ << "prime: " << (is_prime(c.prime) ? "yes" : "no") << "\n";
    out_ << "word: " << format_word(c.word, a) << "\n";
    out_ << "fulfills: " << (c.fulfills_ok ? "ok" : "failed") << "\n";
    out_ << "reachability: " << (c.reachability_ok ? "ok" : "failed") << "\n";
    if (c.order_hypothesis_unchecked) out_ << "unchecked: w has infinite order\n";
    out_ << serialize_graph(c.graph.based());
    dot(c.graph.based());
    return kYes;
  }

  static Vertex vertex_arg(const std::string& s) {
    try {
      std::size_t used = 0;
      auto v = std::stoul(s, &used);
      if (used == s.size()) return static_cast<Vertex>(v);
    } catch (const std::exception&) {
    }
    throw ParseError(1, "expected a vertex id, got '" + s + "'");
  }

  std::uint32_t letter(const std::string& name) {
    auto idx = alphabet().index_of(name);
    if (!idx) throw PreconditionError("unknown generator '" + name + "'");
    return *idx;
  }

  const std::shared_ptr<const Presentation>& presentation() {
    if (!presentation_) {
      presentation_ = std::make_shared<const Presentation>(
          parse_presentation(read_file(common_.presentation)));
    }
    return presentation_;
  }
  const Alphabet& alphabet() { return presentation()->alphabet(); }

  std::size_t max_cosets() const {
    return common_.max_cosets ? *common_.max_cosets : default_max_cosets();
  }

  SubgroupGraph subgroup() {
    if (!sub_.graph.empty()) {
      return SubgroupGraph(parse_graph(read_file(sub_.graph), presentation()->alphabet_ptr()),
                           presentation());
    }
    std::vector<Word> gens;
    for (const auto& g : sub_.gens) {
      for (auto& w : word_list(g, alphabet())) gens.push_back(std::move(w));
    }
    return coset_enumerate(presentation(), gens, max_cosets());
  }

  // Comma-separated words; empty entries and `1` are dropped.
  static std::vector<Word> word_list(const std::string& spec, const Alphabet& a) {
    std::vector<Word> out;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = spec.find(',', start);
      Word w = parse_word(spec.substr(start, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - start),
                          a);
      if (!w.empty()) out.push_back(std::move(w));
      if (comma == std::string::npos) return out;
      start = comma + 1;
    }
  }

  SubgroupGraph resolve(const std::string& spec) { return resolve(spec, presentation()); }

  // A graph file when the path exists, else comma-separated generators.
  SubgroupGraph resolve(const std::string& spec,
                        const std::shared_ptr<const Presentation>& p) {
    if (!spec.empty() && std::filesystem::is_regular_file(spec)) {
      return SubgroupGraph(parse_graph(read_file(spec), p->alphabet_ptr()), p);
    }
    return coset_enumerate(p, word_list(spec, p->alphabet()), max_cosets());
  }

  void dot(const BasedXGraph& g) {
    if (common_.dot.empty()) return;
    std::string text = export_dot(canonical(g));
    if (common_.dot == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(common_.dot);
    if (!f) throw PreconditionError("cannot write '" + common_.dot + "'");
    f << text;
  }

  std::ostream& out_;
  std::ostream& err_;
  std::function<int()> action_;
  Common common_;
  SubgroupOptions sub_;
  std::shared_ptr<const Presentation> presentation_;
  std::string file_, word_, mode_ = "based";
  std::vector<std::string> pair_;
  std::size_t order_ = 0, d_ = 0, n_ = 0;
  SearchOptions search_;
  std::string a_, b_;
  std::uint32_t k_ = 0, l_ = 0;
  std::uint64_t p_ = 0, prime_ = 0;
  std::optional<std::uint64_t> pairs_;
  std::string h1_, w1_, right_path_, h2_, w2_;
  std::vector<std::string> identify_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  return Cli(out, err).run(args);
}

}  // namespace stallings

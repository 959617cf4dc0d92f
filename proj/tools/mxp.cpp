// mxp: command line front end for computations in M(X, P).
//
// Exit codes: 0 true/success, 1 false/absent, 2 input error,
// 3 budget exhausted, 4 the --oracle cross-check disagreed.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mxp/complex.hpp"
#include "mxp/io.hpp"
#include "mxp/oracle.hpp"
#include "mxp/order.hpp"
#include "mxp/stephen.hpp"

using namespace mxp;

namespace {

  constexpr int kTrue     = 0;
  constexpr int kFalse    = 1;
  constexpr int kInput    = 2;
  constexpr int kBudget   = 3;
  constexpr int kDisagree = 4;

  struct Disagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Settings {
    std::size_t budget = kDefaultBudget;
    bool        oracle = false;

    SaturationOptions options() const {
      return {.budget = budget, .shuffle_seed = std::nullopt};
    }
  };

  struct Args {
    std::string pres_file;
    std::vector<std::string> generators, generators2;
    std::string u, w;
    std::string dot, json;
    std::string from, to, at;
  };

  // A generator file holds one word per line or ';'-separated words;
  // '#' starts a comment.
  std::string generator_file(std::string const& path) {
    std::istringstream in(io::read_file(path));
    std::string        text, line;
    while (std::getline(in, line)) {
      text += line.substr(0, line.find('#')) + ';';
    }
    return text;
  }

  // Each -g value may itself hold several words separated by ';', or name
  // a generator file as @path.
  std::vector<Word> words(Presentation const&             pres,
                          std::vector<std::string> const& values) {
    std::vector<Word> result;
    for (auto const& value : values) {
      auto text = value.starts_with('@') ? generator_file(value.substr(1)) : value;
      for (auto& w : pres.parse_words(text)) {
        result.push_back(std::move(w));
      }
    }
    return result;
  }

  Presentation presentation(Args const& args) {
    return io::parse_presentation(io::read_file(args.pres_file));
  }

  // "-" means standard output.
  void write(std::string const& path, std::string const& text) {
    if (path.empty()) {
      return;
    }
    if (path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw InputError("cannot write '" + path + "'");
    }
  }

  void summarize(Automaton const&        a,
                 Presentation const&     pres,
                 SaturationReport const& report) {
    std::cout << "vertices: " << a.num_vertices() << '\n';
    auto const& alphabet = a.alphabet();
    for (std::uint32_t i = 0; i < alphabet.num_x; ++i) {
      std::cout << "edges " << pres.x_letters()[i] << ": "
                << a.count_edges(2 * i) << '\n';
    }
    for (std::uint32_t j = 0; j < alphabet.num_p; ++j) {
      std::cout << "loops " << pres.cells()[j].name << ": "
                << a.count_edges(2 * alphabet.num_x + j) << '\n';
    }
    std::cout << "initial: " << a.initial() << '\n'
              << "terminal: " << a.terminal() << '\n'
              << "expansions: " << report.expansions_applied << '\n'
              << "folds: " << report.folds_applied << '\n';
  }

  SaturationReport checked(SaturationReport report) {
    if (report.budget_exhausted) {
      throw BudgetExhausted("budget exhausted after "
                            + std::to_string(report.expansions_applied)
                            + " expansions and "
                            + std::to_string(report.folds_applied)
                            + " folds");
    }
    return report;
  }

  void agree(bool ok, std::string const& what) {
    if (!ok) {
      throw Disagreement(what);
    }
  }

  Automaton generic_coset(std::vector<Word> const& y,
                          Presentation const&      pres,
                          Settings const&          s) {
    return checked(oracle::generic_saturate(flower(pres, y), pres, s.budget))
        .result;
  }

  // u <= w iff w is accepted by SA(u).
  bool generic_leq(Word const&         u,
                   Word const&         w,
                   Presentation const& pres,
                   Settings const&     s) {
    return member(
        checked(oracle::generic_schutzenberger(u, pres, s.budget)).result, w);
  }

  int verdict(bool value) {
    std::cout << (value ? "true" : "false") << '\n';
    return value ? kTrue : kFalse;
  }

  TwoComplex load(std::string const& path, Presentation const& pres) {
    return io::load_complex(io::read_file(path), pres);
  }

  Vertex vertex_of(TwoComplex const& c, std::string const& token) {
    for (Vertex v = 0; v < c.num_vertices(); ++v) {
      if (c.vertex_name(v) == token) {
        return v;
      }
    }
    Vertex v    = 0;
    auto [p, e] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (e != std::errc() || p != token.data() + token.size()
        || v >= c.num_vertices()) {
      throw InputError("unknown vertex '" + token + "'");
    }
    return v;
  }

  std::optional<Morphism> morphism(TwoComplex const& c,
                                   TwoComplex const& d,
                                   std::string const& at) {
    if (at.empty()) {
      return find_immersion(c, d);
    }
    auto colon = at.find(':');
    if (colon == std::string::npos) {
      throw InputError("--at expects 'v1:v2'");
    }
    return immersion(
        c, d, vertex_of(c, at.substr(0, colon)), vertex_of(d, at.substr(colon + 1)));
  }

  void print(Morphism const& m, TwoComplex const& c, TwoComplex const& d) {
    for (Vertex v = 0; v < m.vertex_map.size(); ++v) {
      std::cout << "vertex " << c.vertex_name(v) << " -> "
                << d.vertex_name(m.vertex_map[v]) << '\n';
    }
    for (std::size_t i = 0; i < m.edge_map.size(); ++i) {
      std::cout << "edge " << i << " -> " << m.edge_map[i] << '\n';
    }
    for (std::size_t i = 0; i < m.cell_map.size(); ++i) {
      std::cout << "cell " << i << " -> " << m.cell_map[i] << '\n';
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Verbs
  ////////////////////////////////////////////////////////////////////////

  int run_coset(Args const& args, Settings const& s) {
    auto pres   = presentation(args);
    auto y      = words(pres, args.generators);
    auto report = checked(coset_automaton(y, pres, s.options()));
    if (s.oracle) {
      agree(iso_rooted(report.result, generic_coset(y, pres, s)),
            "coset automaton differs from generic saturation");
    }
    if (args.dot.empty() && args.json.empty()) {
      summarize(report.result, pres, report);
    }
    write(args.dot, io::to_dot(report.result, pres));
    write(args.json, io::to_json(report.result, pres));
    return kTrue;
  }

  int run_schutz(Args const& args, Settings const& s) {
    auto pres   = presentation(args);
    auto w      = pres.parse_word(args.w);
    auto report = checked(schutzenberger(w, pres, s.options()));
    if (s.oracle) {
      agree(iso_rooted(report.result,
                       checked(oracle::generic_schutzenberger(w, pres, s.budget))
                           .result),
            "Schutzenberger automaton differs from generic saturation");
    }
    if (args.dot.empty() && args.json.empty()) {
      summarize(report.result, pres, report);
    }
    write(args.dot, io::to_dot(report.result, pres));
    write(args.json, io::to_json(report.result, pres));
    return kTrue;
  }

  int run_leq(Args const& args, Settings const& s, bool both_ways) {
    auto pres = presentation(args);
    auto u    = pres.parse_word(args.u);
    auto w    = pres.parse_word(args.w);
    bool value = both_ways ? word_eq(u, w, pres, s.options())
                           : leq(u, w, pres, s.options());
    if (s.oracle) {
      bool expected = generic_leq(u, w, pres, s)
                      && (!both_ways || generic_leq(w, u, pres, s));
      agree(value == expected, "order test differs from generic saturation");
    }
    return verdict(value);
  }

  int run_member(Args const& args, Settings const& s) {
    auto pres  = presentation(args);
    auto y     = words(pres, args.generators);
    auto w     = pres.parse_word(args.w);
    bool value = submonoid_member(w, y, pres, s.options());
    if (s.oracle) {
      agree(value == member(generic_coset(y, pres, s), w),
            "membership differs from generic saturation");
      if (oracle::naive_member(w, y, pres, 3, s.budget)
          == oracle::Evidence::yes) {
        agree(value, "enumeration found a product below the word");
      }
    }
    return verdict(value);
  }

  int run_conjugate(Args const& args, Settings const& s) {
    auto pres = presentation(args);
    auto y1   = words(pres, args.generators);
    auto y2   = words(pres, args.generators2);
    auto m    = conjugate(y1, y2, pres, s.options());
    if (s.oracle) {
      agree(m.has_value()
                == conjugate(generic_coset(y1, pres, s),
                             generic_coset(y2, pres, s))
                       .has_value(),
            "conjugacy differs from generic saturation");
    }
    if (!m) {
      std::cout << "not conjugate\n";
      return kFalse;
    }
    std::cout << pres.format(*m) << '\n';
    return kTrue;
  }

  int run_complex(Args const& args, Settings const& s) {
    auto pres   = presentation(args);
    auto y      = words(pres, args.generators);
    auto report = checked(coset_automaton(y, pres, s.options()));
    if (s.oracle) {
      agree(iso_rooted(report.result, generic_coset(y, pres, s)),
            "coset automaton differs from generic saturation");
    }
    auto c = complex_of_automaton(report.result, pres);
    if (args.dot.empty() && args.json.empty()) {
      std::cout << io::to_json(c, pres);
    }
    write(args.dot, io::to_dot(c, pres));
    write(args.json, io::to_json(c, pres));
    return kTrue;
  }

  int run_immerse(Args const& args, Settings const&) {
    auto pres = presentation(args);
    auto c    = load(args.from, pres);
    auto d    = load(args.to, pres);
    auto m    = morphism(c, d, args.at);
    if (!m) {
      std::cout << "none\n";
      return kFalse;
    }
    print(*m, c, d);
    return kTrue;
  }

  int run_cover(Args const& args, Settings const& s) {
    auto pres = presentation(args);
    if (args.from.empty() == args.generators.empty()) {
      throw InputError("cover expects exactly one of --from and -g");
    }
    auto c = args.from.empty()
                 ? complex_of_automaton(
                       checked(coset_automaton(
                                   words(pres, args.generators), pres, s.options()))
                           .result,
                       pres)
                 : load(args.from, pres);
    auto d = args.to.empty() ? bouquet(pres) : load(args.to, pres);
    auto m = morphism(c, d, args.at);
    if (!m) {
      std::cout << "no immersion\n";
      return kFalse;
    }
    bool value = is_covering(*m, c, d);
    std::cout << (value ? "covering" : "not a covering") << '\n';
    return value ? kTrue : kFalse;
  }

  int run_group_image(Args const& args, Settings const&) {
    auto pres = presentation(args);
    std::cout << group_image(pres).to_string(pres) << '\n';
    return kTrue;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Immersions into 2-complexes via the inverse monoid M(X, P)"};
  app.require_subcommand(1);

  Settings settings;
  Args     args;
  app.add_option("--budget", settings.budget, "Expansions plus folds allowed")
      ->check(CLI::PositiveNumber);
  app.add_flag("--oracle", settings.oracle, "Cross-check with the naive engine");

  auto pres_option = [&](CLI::App* sub) {
    sub->add_option("-p,--presentation", args.pres_file, "Presentation file")
        ->required();
  };
  auto outputs = [&](CLI::App* sub) {
    sub->add_option("--dot", args.dot, "Write DOT here ('-' for stdout)");
    sub->add_option("--json", args.json, "Write JSON here ('-' for stdout)");
  };

  auto coset = app.add_subcommand("coset", "Omega-coset automaton of <Y>");
  pres_option(coset);
  coset->add_option("-g,--generators", args.generators, "Generator words; repeat or separate with ';'")
      ->required();
  outputs(coset);

  auto schutz = app.add_subcommand("schutz", "Schutzenberger automaton of a word");
  pres_option(schutz);
  schutz->add_option("-w,--word", args.w, "Word")->required();
  outputs(schutz);

  auto eq  = app.add_subcommand("eq", "Decide u = w");
  auto leq = app.add_subcommand("leq", "Decide u <= w in the natural order");
  for (auto* sub : {eq, leq}) {
    pres_option(sub);
    sub->add_option("-u", args.u, "Left word")->required();
    sub->add_option("-w", args.w, "Right word")->required();
  }

  auto member = app.add_subcommand("member", "Decide w in <Y>^omega");
  pres_option(member);
  member->add_option("-g,--generators", args.generators, "Generator words; repeat or separate with ';'")
      ->required();
  member->add_option("-w,--word", args.w, "Word")->required();

  auto conj = app.add_subcommand("conjugate", "Find m conjugating <Y1> to <Y2>");
  pres_option(conj);
  conj->add_option("--g1", args.generators, "Generators of the first submonoid")
      ->required();
  conj->add_option("--g2", args.generators2, "Generators of the second submonoid")
      ->required();

  auto complex = app.add_subcommand("complex", "Coset 2-complex of <Y>");
  pres_option(complex);
  complex->add_option("-g,--generators", args.generators, "Generator words; repeat or separate with ';'")
      ->required();
  outputs(complex);

  auto immerse = app.add_subcommand("immerse", "Find an immersion between complexes");
  pres_option(immerse);
  immerse->add_option("--from", args.from, "Source complex (JSON or text)")
      ->required();
  immerse->add_option("--to", args.to, "Target complex (JSON or text)")
      ->required();
  immerse->add_option("--at", args.at, "Basepoints 'v1:v2'");

  auto cover = app.add_subcommand("cover", "Decide whether the immersion is a covering");
  pres_option(cover);
  cover->add_option("--from", args.from, "Source complex (JSON or text)");
  cover->add_option("-g,--generators", args.generators, "Or: the coset complex of these generators");
  cover->add_option("--to", args.to, "Target complex; default the bouquet B_{X,P}");
  cover->add_option("--at", args.at, "Basepoints 'v1:v2'");

  auto image = app.add_subcommand("group-image", "Greatest group image G_{X,P}");
  pres_option(image);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : kInput;
  }

  try {
    if (coset->parsed()) return run_coset(args, settings);
    if (schutz->parsed()) return run_schutz(args, settings);
    if (eq->parsed()) return run_leq(args, settings, true);
    if (leq->parsed()) return run_leq(args, settings, false);
    if (member->parsed()) return run_member(args, settings);
    if (conj->parsed()) return run_conjugate(args, settings);
    if (complex->parsed()) return run_complex(args, settings);
    if (immerse->parsed()) return run_immerse(args, settings);
    if (cover->parsed()) return run_cover(args, settings);
    if (image->parsed()) return run_group_image(args, settings);
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (BudgetExhausted const& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (Disagreement const& e) {
    std::cerr << "oracle: " << e.what() << '\n';
    return kDisagree;
  }
  return kInput;
}

#include "mxp/oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace mxp::oracle {

  namespace {

    // All directed edges, inverses included, kept sorted and duplicate-free
    // between operations.
    struct NaiveGraph {
      explicit NaiveGraph(Alphabet a) : alphabet(a) {}

      Alphabet          alphabet;
      std::vector<bool> alive;
      std::vector<Edge> edges;
      Vertex            initial  = 0;
      Vertex            terminal = 0;

      Vertex add_vertex() {
        alive.push_back(true);
        return static_cast<Vertex>(alive.size() - 1);
      }

      void add_edge(Vertex u, LetterCode l, Vertex v) {
        edges.push_back({u, l, v});
        edges.push_back({v, alphabet.inverse(l), u});
        normalise();
      }

      void add_path(Vertex from, std::span<LetterCode const> word, Vertex to) {
        Vertex at = from;
        for (std::size_t i = 0; i < word.size(); ++i) {
          Vertex next = i + 1 == word.size() ? to : add_vertex();
          add_edge(at, word[i], next);
          at = next;
        }
      }

      void normalise() {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      }

      void identify(Vertex keep, Vertex gone) {
        for (auto& e : edges) {
          if (e.source == gone) {
            e.source = keep;
          }
          if (e.target == gone) {
            e.target = keep;
          }
        }
        if (initial == gone) {
          initial = keep;
        }
        if (terminal == gone) {
          terminal = keep;
        }
        alive[gone] = false;
        normalise();
      }

      // One identification per call; false once deterministic.
      bool fold_once() {
        for (std::size_t i = 1; i < edges.size(); ++i) {
          auto const& a = edges[i - 1];
          auto const& b = edges[i];
          if (a.source == b.source && a.label == b.label) {
            identify(std::min(a.target, b.target), std::max(a.target, b.target));
            return true;
          }
        }
        return false;
      }

      std::optional<Vertex> step(Vertex v, LetterCode l) const {
        auto it = std::lower_bound(
            edges.begin(), edges.end(), Edge{v, l, 0});
        if (it != edges.end() && it->source == v && it->label == l) {
          return it->target;
        }
        return std::nullopt;
      }

      std::optional<Vertex> read(Vertex v, std::span<LetterCode const> w) const {
        for (auto l : w) {
          auto next = step(v, l);
          if (!next) {
            return std::nullopt;
          }
          v = *next;
        }
        return v;
      }

      Automaton to_automaton() const {
        std::vector<Vertex> number(alive.size(), kNoVertex);
        Vertex              n = 0;
        for (Vertex v = 0; v < alive.size(); ++v) {
          if (alive[v]) {
            number[v] = n++;
          }
        }
        std::vector<Edge> renamed;
        for (auto const& e : edges) {
          renamed.push_back({number[e.source], e.label, number[e.target]});
        }
        return Automaton::from_edges(
            alphabet, n, renamed, number[initial], number[terminal]);
      }
    };

    std::vector<LetterCode> codes(Alphabet a, std::span<Letter const> w) {
      std::vector<LetterCode> result;
      for (Letter l : w) {
        result.push_back(a.code(l));
      }
      return result;
    }

    NaiveGraph path_graph(Alphabet a, std::span<Letter const> w) {
      NaiveGraph g(a);
      Vertex     start = g.add_vertex();
      Vertex     end   = start;
      for (Letter l : w) {
        Vertex next = g.add_vertex();
        g.add_edge(end, a.code(l), next);
        end = next;
      }
      g.initial  = start;
      g.terminal = end;
      return g;
    }

    struct Relation {
      std::vector<LetterCode> lhs;
      std::vector<LetterCode> rhs;
    };

    // Each defining relation, once per direction.
    std::vector<Relation> relations(Presentation const& pres) {
      auto                  a = pres.alphabet();
      std::vector<Relation> result;
      for (std::uint32_t j = 0; j < a.num_p; ++j) {
        LetterCode              r = 2 * a.num_x + j;
        std::vector<LetterCode> rr{r, r};
        std::vector<LetterCode> single{r};
        std::vector<LetterCode> r_bl{r};
        auto                    bl = codes(a, pres.boundary(j));
        r_bl.insert(r_bl.end(), bl.begin(), bl.end());
        result.push_back({rr, single});
        result.push_back({single, rr});
        result.push_back({single, r_bl});
        result.push_back({r_bl, single});
      }
      return result;
    }

    struct Counters {
      std::size_t expansions = 0;
      std::size_t folds      = 0;
      bool        exhausted  = false;
    };

    Counters run(NaiveGraph& g, Presentation const& pres, std::size_t budget) {
      Counters    c;
      auto        rels   = relations(pres);
      std::size_t cursor = 0;
      while (true) {
        while (g.fold_once()) {
          ++c.folds;
        }
        bool applied = false;
        auto n       = g.alive.size();
        for (std::size_t i = 0; i < n && !applied; ++i) {
          Vertex v = static_cast<Vertex>((cursor + i) % n);
          if (!g.alive[v]) {
            continue;
          }
          for (auto const& rel : rels) {
            auto end = g.read(v, rel.lhs);
            if (!end || g.read(v, rel.rhs) == end) {
              continue;
            }
            if (c.expansions + c.folds >= budget) {
              c.exhausted = true;
              return c;
            }
            g.add_path(v, rel.rhs, *end);
            ++c.expansions;
            cursor  = v + 1;
            applied = true;
            break;
          }
        }
        if (!applied) {
          return c;
        }
      }
    }

    NaiveGraph from_labeled(LabeledGraph const& g) {
      NaiveGraph result(g.alphabet());
      for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        result.add_vertex();
      }
      for (auto const& e : g.edges()) {
        result.add_edge(e.source, e.label, e.target);
      }
      result.initial  = g.initial();
      result.terminal = g.terminal();
      return result;
    }

  }  // namespace

  Automaton munn_tree(Presentation const& pres, std::span<Letter const> w) {
    if (std::any_of(w.begin(), w.end(), [](Letter l) { return l.is_cell(); })) {
      throw InputError("Munn trees are defined for words over X only");
    }
    auto g = path_graph(pres.alphabet(), w);
    while (g.fold_once()) {
    }
    return g.to_automaton();
  }

  bool is_tree(Automaton const& a) {
    // A connected graph is a tree iff it has one edge fewer than vertices.
    return a.positive_edges().size() + 1 == a.num_vertices();
  }

  SaturationReport generic_saturate(LabeledGraph const& g,
                                    Presentation const& pres,
                                    std::size_t         budget) {
    auto naive = from_labeled(g);
    auto c     = run(naive, pres, budget);
    while (naive.fold_once()) {
    }
    return {naive.to_automaton(), c.expansions, c.folds, c.exhausted};
  }

  SaturationReport generic_schutzenberger(std::span<Letter const> w,
                                          Presentation const&     pres,
                                          std::size_t             budget) {
    auto g = path_graph(pres.alphabet(), w);
    auto c = run(g, pres, budget);
    while (g.fold_once()) {
    }
    return {g.to_automaton(), c.expansions, c.folds, c.exhausted};
  }

  Evidence naive_member(std::span<Letter const> w,
                        std::span<Word const>   generators,
                        Presentation const&     pres,
                        std::size_t             len_bound,
                        std::size_t             budget) {
    std::vector<Word> factors(generators.begin(), generators.end());
    for (auto const& y : generators) {
      factors.push_back(invert(y));
    }
    std::set<Word> products{Word{}};
    std::set<Word> frontier{Word{}};
    for (std::size_t len = 0; len < len_bound; ++len) {
      std::set<Word> next;
      for (auto const& s : frontier) {
        for (auto const& f : factors) {
          auto p = concat(s, f);
          if (products.insert(p).second) {
            next.insert(std::move(p));
          }
        }
      }
      frontier = std::move(next);
    }
    auto alphabet = pres.alphabet();
    auto target   = codes(alphabet, w);
    for (auto const& s : products) {
      auto g = path_graph(alphabet, s);
      auto c = run(g, pres, budget);
      if (c.exhausted) {
        throw BudgetExhausted("oracle saturation budget exhausted");
      }
      if (g.read(g.initial, target) == g.terminal) {
        return Evidence::yes;
      }
    }
    return Evidence::no_evidence;
  }

}  // namespace mxp::oracle

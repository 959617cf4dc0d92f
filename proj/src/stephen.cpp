#include "mxp/stephen.hpp"

#include <algorithm>
#include <random>

namespace mxp {

  LabeledGraph linear_automaton(Presentation const&     pres,
                                std::span<Letter const> w) {
    auto         alphabet = pres.alphabet();
    LabeledGraph g(alphabet);
    Vertex       current = g.add_vertex();
    for (Letter l : w) {
      Vertex next = g.add_vertex();
      g.add_edge(current, alphabet.code(l), next);
      current = next;
    }
    g.set_roots(0, current);
    return g;
  }

  LabeledGraph flower(Presentation const&   pres,
                      std::span<Word const> generators) {
    auto         alphabet = pres.alphabet();
    LabeledGraph g(alphabet);
    Vertex       hub = g.add_vertex();
    for (auto const& y : generators) {
      Vertex current = hub;
      for (std::size_t i = 0; i < y.size(); ++i) {
        Vertex next = i + 1 == y.size() ? hub : g.add_vertex();
        g.add_edge(current, alphabet.code(y[i]), next);
        current = next;
      }
    }
    g.set_roots(hub, hub);
    return g;
  }

  namespace {

    class Saturator {
     public:
      Saturator(LabeledGraph const&      g,
                Presentation const&      pres,
                SaturationOptions const& options)
          : pres_(pres),
            alphabet_(pres.alphabet()),
            graph_(alphabet_),
            budget_(options.budget) {
        if (g.alphabet() != alphabet_) {
          throw InputError("graph and presentation have different alphabets");
        }
        auto edges = g.edges();
        if (options.shuffle_seed) {
          rng_.emplace(*options.shuffle_seed);
          std::shuffle(edges.begin(), edges.end(), *rng_);
          graph_.shuffle_with(&*rng_);
        }
        for (std::size_t i = 0; i < g.num_vertices(); ++i) {
          candidates_.push_back(graph_.add_vertex());
        }
        for (auto const& e : edges) {
          graph_.add_edge(e.source, e.label, e.target);
        }
        graph_.take_touched();
        initial_  = g.initial();
        terminal_ = g.terminal();
      }

      SaturationReport run() {
        bool exhausted = false;
        while (true) {
          if (graph_.has_pending()) {
            folds_ += graph_.fold(budget_ - std::min(budget_, steps()));
            if (graph_.has_pending()) {
              exhausted = true;
              break;
            }
          }
          auto touched = graph_.take_touched();
          candidates_.insert(candidates_.end(), touched.begin(), touched.end());
          if (candidates_.empty()) {
            break;
          }
          Vertex v = graph_.find(next_candidate());
          if (steps() >= budget_ && needs_expansion(v)) {
            exhausted = true;
            break;
          }
          if (expand(v)) {
            ++expansions_;
            candidates_.push_back(v);
          }
        }
        if (exhausted) {
          // Finish folding so the partial result is still an automaton.
          graph_.fold();
        }
        return {graph_.to_automaton(initial_, terminal_),
                expansions_,
                folds_,
                exhausted};
      }

     private:
      std::size_t steps() const noexcept {
        return expansions_ + folds_;
      }

      Vertex next_candidate() {
        std::size_t i = candidates_.size() - 1;
        if (rng_) {
          i = std::uniform_int_distribution<std::size_t>(0, i)(*rng_);
          std::swap(candidates_[i], candidates_.back());
        }
        Vertex v = candidates_.back();
        candidates_.pop_back();
        return v;
      }

      LetterCode cell_code(std::uint32_t cell) const noexcept {
        return 2 * alphabet_.num_x + cell;
      }

      // Follows bl as far as defined from v; returns the vertex reached and
      // the number of letters read.
      std::pair<Vertex, std::size_t> trace(Vertex v, Word const& bl) const {
        std::size_t k = 0;
        for (; k < bl.size(); ++k) {
          Vertex next = graph_.target(v, alphabet_.code(bl[k]));
          if (next == kNoVertex) {
            break;
          }
          v = next;
        }
        return {v, k};
      }

      bool needs_expansion(Vertex v) const {
        for (std::uint32_t j = 0; j < alphabet_.num_p; ++j) {
          Vertex t = graph_.target(v, cell_code(j));
          if (t == kNoVertex) {
            continue;
          }
          if (t != v) {
            return true;
          }
          auto const& bl     = pres_.boundary(j);
          auto [end, length] = trace(v, bl);
          if (length != bl.size() || end != v) {
            return true;
          }
        }
        return false;
      }

      bool expand(Vertex v) {
        for (std::uint32_t j = 0; j < alphabet_.num_p; ++j) {
          Vertex t = graph_.target(v, cell_code(j));
          if (t != kNoVertex && t != v) {
            graph_.merge(v, t);
            return true;
          }
        }
        for (std::uint32_t j = 0; j < alphabet_.num_p; ++j) {
          if (graph_.target(v, cell_code(j)) != v) {
            continue;
          }
          auto const& bl     = pres_.boundary(j);
          auto [end, length] = trace(v, bl);
          if (length == bl.size()) {
            if (end == v) {
              continue;
            }
            graph_.merge(end, v);
            return true;
          }
          Vertex current = end;
          for (std::size_t i = length; i < bl.size(); ++i) {
            Vertex next = i + 1 == bl.size() ? v : graph_.add_vertex();
            graph_.add_edge(current, alphabet_.code(bl[i]), next);
            current = next;
          }
          return true;
        }
        return false;
      }

      Presentation const&            pres_;
      Alphabet                       alphabet_;
      FoldingGraph                   graph_;
      std::size_t                    budget_;
      std::optional<std::mt19937_64> rng_;
      std::vector<Vertex>            candidates_;
      Vertex                         initial_    = 0;
      Vertex                         terminal_   = 0;
      std::size_t                    expansions_ = 0;
      std::size_t                    folds_      = 0;
    };

  }  // namespace

  SaturationReport saturate(LabeledGraph const&      g,
                            Presentation const&      pres,
                            SaturationOptions const& options) {
    return Saturator(g, pres, options).run();
  }

  SaturationReport schutzenberger(std::span<Letter const>  w,
                                  Presentation const&      pres,
                                  SaturationOptions const& options) {
    return saturate(linear_automaton(pres, w), pres, options);
  }

  SaturationReport coset_automaton(std::span<Word const>    generators,
                                   Presentation const&      pres,
                                   SaturationOptions const& options) {
    return saturate(flower(pres, generators), pres, options);
  }

  bool is_saturated(Automaton const& a, Presentation const& pres) {
    auto alphabet = a.alphabet();
    for (Vertex v = 0; v < a.num_vertices(); ++v) {
      for (std::uint32_t j = 0; j < alphabet.num_p; ++j) {
        Vertex t = a.target(v, 2 * alphabet.num_x + j);
        if (t == kNoVertex) {
          continue;
        }
        if (t != v) {
          return false;
        }
        auto end = act(a, v, pres.boundary(j));
        if (!end || *end != v) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace mxp

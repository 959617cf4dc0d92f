// Involutive labelled graphs, Stallings folding and inverse automata.
//
// Every edge (u, l, v) implies an inverse edge (v, l^-1, u).  Graphs only
// store the positively labelled half of each pair (positive X letters and
// cell letters); the inverse half is implicit.

#ifndef MXP_GRAPH_HPP_
#define MXP_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "core.hpp"

namespace mxp {

  using Vertex = std::uint32_t;

  inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

  struct Edge {
    Vertex     source = 0;
    LetterCode label  = 0;
    Vertex     target = 0;

    friend auto operator<=>(Edge const&, Edge const&) = default;
  };

  //! A finite involutive labelled multigraph with an initial and a terminal
  //! root.  Not necessarily deterministic; this is the input to folding.
  class LabeledGraph {
   public:
    explicit LabeledGraph(Alphabet alphabet) : alphabet_(alphabet) {}

    Vertex add_vertex() {
      return num_vertices_++;
    }

    //! Adds (u, l, v) together with its inverse.  Negative letters are
    //! stored as the reversed positive edge.
    void add_edge(Vertex u, LetterCode l, Vertex v);

    void set_roots(Vertex initial, Vertex terminal);

    [[nodiscard]] Alphabet alphabet() const noexcept {
      return alphabet_;
    }
    [[nodiscard]] std::size_t num_vertices() const noexcept {
      return num_vertices_;
    }
    [[nodiscard]] std::vector<Edge> const& edges() const noexcept {
      return edges_;
    }
    [[nodiscard]] Vertex initial() const noexcept {
      return initial_;
    }
    [[nodiscard]] Vertex terminal() const noexcept {
      return terminal_;
    }

   private:
    Alphabet          alphabet_;
    Vertex            num_vertices_ = 0;
    std::vector<Edge> edges_;
    Vertex            initial_  = 0;
    Vertex            terminal_ = 0;
  };

  //! A birooted, connected, deterministic involutive graph.  Vertices are
  //! 0, ..., n - 1.  Immutable once built.
  class Automaton {
   public:
    //! Builds an automaton from a list of edges (any letters; inverses are
    //! added).  Throws InputError on determinism violations, dangling
    //! vertices or if some vertex is unreachable from the initial root.
    static Automaton from_edges(Alphabet                alphabet,
                                std::size_t             num_vertices,
                                std::span<Edge const>   edges,
                                Vertex                  initial,
                                Vertex                  terminal);

    [[nodiscard]] Alphabet alphabet() const noexcept {
      return alphabet_;
    }
    [[nodiscard]] std::size_t num_vertices() const noexcept {
      return num_vertices_;
    }
    [[nodiscard]] Vertex initial() const noexcept {
      return initial_;
    }
    [[nodiscard]] Vertex terminal() const noexcept {
      return terminal_;
    }

    //! Target of the edge labelled `l` at `v`, or kNoVertex.
    [[nodiscard]] Vertex target(Vertex v, LetterCode l) const noexcept {
      return table_[static_cast<std::size_t>(v) * alphabet_.size() + l];
    }

    //! Positive X edges plus cell edges (each undirected cell edge once,
    //! with source <= target), ordered by (source, label).
    [[nodiscard]] std::vector<Edge> positive_edges() const;

    //! Number of positive edges with label `l` (a positive X letter or a
    //! cell letter).
    [[nodiscard]] std::size_t count_edges(LetterCode l) const;

    //! Number of cell edges that are loops.
    [[nodiscard]] std::size_t count_cell_loops() const;

    [[nodiscard]] Automaton rerooted(Vertex initial, Vertex terminal) const;

    //! The same automaton with vertex v renamed perm[v].
    [[nodiscard]] Automaton relabeled(std::span<Vertex const> perm) const;

   private:
    friend class FoldingGraph;
    Automaton(Alphabet alphabet, std::size_t n)
        : alphabet_(alphabet),
          num_vertices_(n),
          table_(n * alphabet.size(), kNoVertex) {}

    Alphabet            alphabet_;
    std::size_t         num_vertices_ = 0;
    std::vector<Vertex> table_;
    Vertex              initial_  = 0;
    Vertex              terminal_ = 0;
  };

  //! Union-find working copy of a graph being folded.  Vertex ids handed out
  //! by add_vertex stay valid; find() maps them to their current class.
  //! Merges are queued and carried out by fold().
  class FoldingGraph {
   public:
    explicit FoldingGraph(Alphabet alphabet);

    Vertex add_vertex();
    void   add_edge(Vertex u, LetterCode l, Vertex v);
    void   merge(Vertex u, Vertex v);

    //! Carries out queued merges, and those they cause, until the graph is
    //! deterministic or `max_unions` unions have been performed.  Returns
    //! the number of unions performed.
    std::size_t fold(std::size_t max_unions
                     = std::numeric_limits<std::size_t>::max());

    [[nodiscard]] bool has_pending() const noexcept {
      return !pending_.empty();
    }

    [[nodiscard]] Vertex find(Vertex v) const;
    [[nodiscard]] Vertex target(Vertex v, LetterCode l) const;

    [[nodiscard]] Alphabet alphabet() const noexcept {
      return alphabet_;
    }

    //! Class representatives that received an edge or absorbed another class
    //! since the last call.
    std::vector<Vertex> take_touched();

    //! When set, queued merges are processed in random order.
    void shuffle_with(std::mt19937_64* rng) noexcept {
      rng_ = rng;
    }

    //! Quotient automaton, renumbered by breadth-first discovery from the
    //! initial root.  Requires no pending merges.
    [[nodiscard]] Automaton to_automaton(Vertex initial, Vertex terminal) const;

   private:
    void        set_half(Vertex u, LetterCode l, Vertex v);
    bool        unite(Vertex u, Vertex v);
    Vertex&     slot(Vertex v, LetterCode l) {
      return out_[static_cast<std::size_t>(v) * alphabet_.size() + l];
    }

    Alphabet                         alphabet_;
    mutable std::vector<Vertex>      parent_;
    std::vector<std::uint32_t>       size_;
    std::vector<Vertex>              out_;
    std::vector<std::pair<Vertex, Vertex>> pending_;
    std::vector<Vertex>              touched_;
    std::mt19937_64*                 rng_ = nullptr;
  };

  //! Quotient of g by the least vertex equivalence making it deterministic.
  [[nodiscard]] Automaton fold(LabeledGraph const& g);

  //! As fold(g), but with edges inserted and merges processed in an order
  //! drawn from `seed`.  The result does not depend on the seed.
  [[nodiscard]] Automaton fold(LabeledGraph const& g, std::uint64_t seed);

  //! Number of unions performed when folding g.
  [[nodiscard]] std::size_t count_folds(LabeledGraph const& g);

  //! Reads w from v; nullopt if some step is undefined.
  [[nodiscard]] std::optional<Vertex> act(Automaton const&     a,
                                          Vertex               v,
                                          std::span<Letter const> w);

  //! True iff w labels a path from the initial to the terminal root.
  [[nodiscard]] bool member(Automaton const& a, std::span<Letter const> w);

  //! Byte string identifying a rooted automaton up to root- and
  //! label-preserving isomorphism.
  struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    friend bool operator==(CanonicalCode const&, CanonicalCode const&)
        = default;
  };

  //! Vertices in breadth-first discovery order from the initial root,
  //! following letters in code order.
  [[nodiscard]] std::vector<Vertex> canonical_order(Automaton const& a);

  [[nodiscard]] CanonicalCode canonical_code(Automaton const& a);

  [[nodiscard]] bool iso_rooted(Automaton const& a, Automaton const& b);

  //! For automata whose roots coincide: finds a vertex u of b such that b
  //! rerooted at u is isomorphic to a, and returns the isomorphism as a map
  //! from vertices of a to vertices of b (so a's root goes to u).
  [[nodiscard]] std::optional<std::vector<Vertex>>
  iso_unrooted(Automaton const& a, Automaton const& b);

  //! The unique label-preserving graph morphism a -> b sending `from` to
  //! `to`, if one exists.  Returned as a vertex map.
  [[nodiscard]] std::optional<std::vector<Vertex>>
  graph_morphism(Automaton const& a, Automaton const& b, Vertex from, Vertex to);

  //! Label of a shortest path from the initial root to `v` (ties broken by
  //! letter order).
  [[nodiscard]] Word shortest_path_label(Automaton const& a, Vertex v);

}  // namespace mxp

#endif  // MXP_GRAPH_HPP_

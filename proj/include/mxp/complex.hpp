// Combinatorial 2-complexes labelled over a presentation (X, P, bl).
//
// A 2-cell is stored as its label, its root vertex and its boundary walk,
// a closed edge path at the root spelling bl(label).  No topology is kept;
// the root and boundary walk are all an immersion needs.

#ifndef MXP_COMPLEX_HPP_
#define MXP_COMPLEX_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"
#include "graph.hpp"

namespace mxp {

  //! A 1-cell with a positive label x (an index into the X letters).
  struct OneCell {
    Vertex        source = 0;
    std::uint32_t x      = 0;
    Vertex        target = 0;

    friend bool operator==(OneCell const&, OneCell const&) = default;
  };

  //! One step of a boundary walk: a 1-cell, traversed backwards if reversed.
  struct WalkStep {
    std::uint32_t edge     = 0;
    bool          reversed = false;

    friend bool operator==(WalkStep const&, WalkStep const&) = default;
  };

  struct TwoCell {
    std::uint32_t         label = 0;
    Vertex                root  = 0;
    std::vector<WalkStep> boundary;

    friend bool operator==(TwoCell const&, TwoCell const&) = default;
  };

  class TwoComplex {
   public:
    //! Throws InputError unless every index is in range and every boundary
    //! walk is a closed path at its root labelled bl(label).
    TwoComplex(Presentation const&      pres,
               std::size_t              num_vertices,
               std::vector<OneCell>     one_cells,
               std::vector<TwoCell>     two_cells,
               std::vector<std::string> vertex_names = {});

    [[nodiscard]] Alphabet alphabet() const noexcept {
      return alphabet_;
    }
    [[nodiscard]] std::size_t num_vertices() const noexcept {
      return num_vertices_;
    }
    [[nodiscard]] std::vector<OneCell> const& one_cells() const noexcept {
      return one_cells_;
    }
    [[nodiscard]] std::vector<TwoCell> const& two_cells() const noexcept {
      return two_cells_;
    }
    //! Name from the text format, or "v<index>".
    [[nodiscard]] std::string vertex_name(Vertex v) const;

    [[nodiscard]] Vertex     step_source(WalkStep s) const;
    [[nodiscard]] Vertex     step_target(WalkStep s) const;
    [[nodiscard]] LetterCode step_label(WalkStep s) const;

   private:
    Alphabet                 alphabet_;
    std::size_t              num_vertices_ = 0;
    std::vector<OneCell>     one_cells_;
    std::vector<TwoCell>     two_cells_;
    std::vector<std::string> names_;
  };

  //! A cellular map between two complexes: images of vertices, 1-cells and
  //! 2-cells (by index).
  struct Morphism {
    std::vector<Vertex>        vertex_map;
    std::vector<std::uint32_t> edge_map;
    std::vector<std::uint32_t> cell_map;
  };

  //! Gamma_C: the 1-skeleton plus a cell loop at the root of each 2-cell,
  //! rooted at vertex 0.  Throws InputError if it is not deterministic or
  //! the complex is not connected.
  [[nodiscard]] Automaton graph_of_complex(TwoComplex const& c);

  //! The coset complex: cell loops become 2-cells whose boundary walk is the
  //! path spelling bl from the loop's vertex.  Throws InputError if `a` is
  //! not saturated for `pres`.
  [[nodiscard]] TwoComplex complex_of_automaton(Automaton const&    a,
                                                Presentation const& pres);

  //! B_{X,P}: one vertex, one loop per X letter, one 2-cell per P letter.
  [[nodiscard]] TwoComplex bouquet(Presentation const& pres);

  //! The immersion c -> d sending v_c to v_d, if there is one.  It is
  //! unique when it exists.
  [[nodiscard]] std::optional<Morphism> immersion(TwoComplex const& c,
                                                  TwoComplex const& d,
                                                  Vertex            v_c,
                                                  Vertex            v_d);

  //! An immersion c -> d sending vertex 0 of c anywhere, if one exists.
  [[nodiscard]] std::optional<Morphism> find_immersion(TwoComplex const& c,
                                                       TwoComplex const& d);

  //! For an immersion m: c -> d, true iff every vertex neighbourhood of the
  //! image lifts completely.
  [[nodiscard]] bool is_covering(Morphism const&   m,
                                 TwoComplex const& c,
                                 TwoComplex const& d);

  //! Gamma_C with both roots at v: the omega-coset automaton of the loop
  //! monoid L(C, v).
  [[nodiscard]] Automaton stabilizer(TwoComplex const& c, Vertex v);

  //! Label-preserving isomorphism of complexes.
  [[nodiscard]] bool isomorphic(TwoComplex const& c, TwoComplex const& d);

  //! Rewrites words over a presentation into words over a rebased one:
  //! x -> x, r -> p r p^-1 for the rebased cell letter r.
  class BoundaryTranslator {
   public:
    BoundaryTranslator(std::uint32_t cell, Word prefix)
        : cell_(cell), prefix_(std::move(prefix)) {}

    [[nodiscard]] Word translate(std::span<Letter const> w) const;
    [[nodiscard]] std::vector<Word> translate(std::span<Word const> ws) const;

    [[nodiscard]] Word const& prefix() const noexcept {
      return prefix_;
    }

   private:
    std::uint32_t cell_;
    Word          prefix_;
  };

  struct RebasedPresentation {
    Presentation       presentation;
    BoundaryTranslator translator;
  };

  //! Moves the root of the cell letter `cell` forward by k letters along its
  //! boundary (bl = p q becomes q p, |p| = k), and reverses the walk when
  //! `reverse` is set.  The translator is an isomorphism between the two
  //! inverse monoids.
  [[nodiscard]] RebasedPresentation rebase_boundary(Presentation const& pres,
                                                    std::uint32_t       cell,
                                                    std::size_t         k,
                                                    bool reverse = false);

}  // namespace mxp

#endif  // MXP_COMPLEX_HPP_

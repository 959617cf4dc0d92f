// Decision procedures for M(X,P), all reduced to automaton queries.
//
// Each function throws BudgetExhausted if a saturation it needs does not
// finish within the step budget.

#ifndef MXP_ORDER_HPP_
#define MXP_ORDER_HPP_

#include <optional>
#include <span>

#include "core.hpp"
#include "graph.hpp"
#include "stephen.hpp"

namespace mxp {

  //! u <= w in the natural partial order.
  [[nodiscard]] bool leq(std::span<Letter const>  u,
                         std::span<Letter const>  w,
                         Presentation const&      pres,
                         SaturationOptions const& options = {});

  [[nodiscard]] bool word_eq(std::span<Letter const>  u,
                             std::span<Letter const>  w,
                             Presentation const&      pres,
                             SaturationOptions const& options = {});

  [[nodiscard]] bool is_idempotent(std::span<Letter const>  w,
                                   Presentation const&      pres,
                                   SaturationOptions const& options = {});

  //! w belongs to the closed inverse submonoid generated by Y.
  [[nodiscard]] bool submonoid_member(std::span<Letter const>  w,
                                      std::span<Word const>    generators,
                                      Presentation const&      pres,
                                      SaturationOptions const& options = {});

  //! For omega-coset automata h1, h2 of H1, H2: a word m with
  //! m^-1 H2 m <= H1 and m H1 m^-1 <= H2, if H1 and H2 are conjugate.  m
  //! labels a shortest path in h2 from its root to the vertex matched with
  //! the root of h1.
  [[nodiscard]] std::optional<Word> conjugate(Automaton const& h1,
                                              Automaton const& h2);

  [[nodiscard]] std::optional<Word>
  conjugate(std::span<Word const>    y1,
            std::span<Word const>    y2,
            Presentation const&      pres,
            SaturationOptions const& options = {});

  //! Returns the automaton of a report, or throws BudgetExhausted.
  [[nodiscard]] Automaton const& complete(SaturationReport const& report);

}  // namespace mxp

#endif  // MXP_ORDER_HPP_

// Schützenberger automata and omega-coset automata of M(X,P).
//
// Saturation interleaves Stallings folding with the two relation schemas
// of M(X,P):
//
//   loop rule      a cell edge u --r-- v with u != v collapses (u = v);
//   boundary rule  a cell loop at v gets a closed path labelled bl(r) at v,
//                  reusing existing edges along a prefix of bl(r).
//
// The graph is folded to a fixed point after every expansion.  The fixed
// point is the colimit automaton; it accepts every word above some word
// accepted by the input graph.

#ifndef MXP_STEPHEN_HPP_
#define MXP_STEPHEN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "core.hpp"
#include "graph.hpp"

namespace mxp {

  inline constexpr std::size_t kDefaultBudget = 1'000'000;

  //! Raised by decision procedures when a saturation hits its step budget.
  class BudgetExhausted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct SaturationOptions {
    //! Maximum number of expansions plus folds.
    std::size_t budget = kDefaultBudget;
    //! When set, vertices are examined and merges carried out in an order
    //! drawn from this seed.
    std::optional<std::uint64_t> shuffle_seed;
  };

  struct SaturationReport {
    Automaton   result;
    std::size_t expansions_applied = 0;
    std::size_t folds_applied      = 0;
    bool        budget_exhausted   = false;
  };

  //! Path spelling w from the initial to the terminal root.
  [[nodiscard]] LabeledGraph linear_automaton(Presentation const&     pres,
                                              std::span<Letter const> w);

  //! One closed petal per word of Y, wedged at a hub carrying both roots.
  [[nodiscard]] LabeledGraph flower(Presentation const&   pres,
                                    std::span<Word const> generators);

  [[nodiscard]] SaturationReport saturate(LabeledGraph const&      g,
                                          Presentation const&      pres,
                                          SaturationOptions const& options
                                          = {});

  //! SA(w): accepts exactly the words u with u >= w in M(X,P).
  [[nodiscard]] SaturationReport schutzenberger(std::span<Letter const>  w,
                                                Presentation const&      pres,
                                                SaturationOptions const& options
                                                = {});

  //! The omega-coset automaton of the closed inverse submonoid generated by
  //! Y; it accepts exactly the members of that submonoid.
  [[nodiscard]] SaturationReport
  coset_automaton(std::span<Word const>    generators,
                  Presentation const&      pres,
                  SaturationOptions const& options = {});

  //! True iff no expansion applies: every cell edge is a loop and every
  //! cell loop at v has a closed path labelled by its boundary at v.
  [[nodiscard]] bool is_saturated(Automaton const& a, Presentation const& pres);

}  // namespace mxp

#endif  // MXP_STEPHEN_HPP_

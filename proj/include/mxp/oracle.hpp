// Brute-force reference procedures for cross-checking the main engine.
//
// Nothing here shares code with folding or saturation in graph/stephen:
// graphs are kept as plain sorted edge lists, folding merges one pair at a
// time, and the defining relations r r = r and r = r bl(r) are applied
// literally, in both directions, as path expansions.

#ifndef MXP_ORACLE_HPP_
#define MXP_ORACLE_HPP_

#include <cstddef>
#include <span>

#include "core.hpp"
#include "graph.hpp"
#include "stephen.hpp"

namespace mxp::oracle {

  //! The Munn tree of a word over X u X^-1.  Throws InputError if w
  //! contains a cell letter.
  [[nodiscard]] Automaton munn_tree(Presentation const&     pres,
                                    std::span<Letter const> w);

  //! True iff the underlying undirected graph of `a` has no cycles.
  [[nodiscard]] bool is_tree(Automaton const& a);

  //! Stephen's procedure with the literal defining relations of M(X,P).
  [[nodiscard]] SaturationReport generic_saturate(LabeledGraph const& g,
                                                  Presentation const& pres,
                                                  std::size_t         budget
                                                  = kDefaultBudget);

  //! Schützenberger automaton built by generic_saturate.
  [[nodiscard]] SaturationReport generic_schutzenberger(
      std::span<Letter const> w,
      Presentation const&     pres,
      std::size_t             budget = kDefaultBudget);

  enum class Evidence { yes, no_evidence };

  //! Searches products s of at most `len_bound` factors from Y u Y^-1 for
  //! one with s <= w.  Sound but not complete.
  [[nodiscard]] Evidence naive_member(std::span<Letter const> w,
                                      std::span<Word const>   generators,
                                      Presentation const&     pres,
                                      std::size_t             len_bound,
                                      std::size_t budget = kDefaultBudget);

}  // namespace mxp::oracle

#endif  // MXP_ORACLE_HPP_

#include "mxp/order.hpp"

#include <string>

namespace mxp {

  Automaton const& complete(SaturationReport const& report) {
    if (report.budget_exhausted) {
      throw BudgetExhausted("saturation budget exhausted after "
                            + std::to_string(report.expansions_applied)
                            + " expansions and "
                            + std::to_string(report.folds_applied) + " folds");
    }
    return report.result;
  }

  bool leq(std::span<Letter const>  u,
           std::span<Letter const>  w,
           Presentation const&      pres,
           SaturationOptions const& options) {
    auto report = schutzenberger(u, pres, options);
    return member(complete(report), w);
  }

  bool word_eq(std::span<Letter const>  u,
               std::span<Letter const>  w,
               Presentation const&      pres,
               SaturationOptions const& options) {
    return leq(u, w, pres, options) && leq(w, u, pres, options);
  }

  bool is_idempotent(std::span<Letter const>  w,
                     Presentation const&      pres,
                     SaturationOptions const& options) {
    return word_eq(w, concat(w, w), pres, options);
  }

  bool submonoid_member(std::span<Letter const>  w,
                        std::span<Word const>    generators,
                        Presentation const&      pres,
                        SaturationOptions const& options) {
    auto report = coset_automaton(generators, pres, options);
    return member(complete(report), w);
  }

  std::optional<Word> conjugate(Automaton const& h1, Automaton const& h2) {
    auto map = iso_unrooted(h1, h2);
    if (!map) {
      return std::nullopt;
    }
    return shortest_path_label(h2, (*map)[h1.initial()]);
  }

  std::optional<Word> conjugate(std::span<Word const>    y1,
                                std::span<Word const>    y2,
                                Presentation const&      pres,
                                SaturationOptions const& options) {
    auto r1 = coset_automaton(y1, pres, options);
    auto r2 = coset_automaton(y2, pres, options);
    return conjugate(complete(r1), complete(r2));
  }

}  // namespace mxp
